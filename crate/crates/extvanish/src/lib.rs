//! Ext-vanishing machinery for `GL_n(q)` in cross characteristic `r`.
//!
//! The library computes the quantum characteristic `l` from `(q, r)`, runs the
//! hook-graph irreducibility test for two-row Specht parameters, instantiates
//! the known Ext-vanishing and Ext-transfer statements as symbolic facts, and
//! cross-validates the irreducibility test with an exact Iwahori-Hecke algebra
//! Specht-module construction over `F_r` decided by a Meataxe.

pub mod hooks;
pub mod labels;
pub mod modular;
pub mod oracle;
pub mod partitions;
pub mod report;

pub use hooks::{hook_graph, james_array, james_irreducible, HookGraph, JamesArray, JamesSymbol};
pub use labels::{centralizer_types, cps_to_dd, dd_to_cps, CentralizerType, Convention, ModuleLabel};
pub use modular::{make_params, multiplicative_order, quantum_characteristic, ModularParams};
pub use partitions::{enumerate_partitions, Multipartition, Partition};
pub use report::{classify_s1, generate_report, Report};
