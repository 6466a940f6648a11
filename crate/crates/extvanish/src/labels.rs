//! Label spaces for the irreducible modules: centralizer type shapes and the
//! translation between the two unipotent principal-series indexings.
//!
//! A centralizer type records the factors `GL_{n_i}(q^{a_i})` of the
//! centralizer of a semisimple element only up to the multiset of pairs
//! `(a_i, n_i)` with `Σ a_i n_i = n`; which semisimple class realizes the
//! type is deliberately forgotten (the downstream statements only distinguish
//! the identity class from the rest, and counting classes per type would need
//! a census of monic irreducible polynomials over `F_q`).

use std::cmp::Ordering;
use std::fmt;

use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::partitions::{Multipartition, Partition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabelError {
    #[error("centralizer factors must have positive degree and multiplicity")]
    InvalidFactor,
    #[error("multipartition shape {shape:?} does not match centralizer multiplicities {mults:?}")]
    ShapeMismatch { shape: Vec<usize>, mults: Vec<usize> },
    #[error("not a valid DD principal-series label: partition is not l-regular")]
    NotDdPrincipalSeries,
    #[error("not a valid CPS principal-series label: partition is not l-restricted")]
    NotCpsPrincipalSeries,
    #[error("label translation expects a unipotent label in the {expected} convention")]
    WrongLabelKind { expected: &'static str },
}

/// Multiset of pairs `(degree, multiplicity)` with `Σ degree · multiplicity`
/// equal to the rank; canonical form sorts factors by `(a, n_i)` descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CentralizerType {
    factors: Vec<(usize, usize)>,
}

impl CentralizerType {
    pub fn new(mut factors: Vec<(usize, usize)>) -> Result<Self, LabelError> {
        if factors.iter().any(|&(a, m)| a == 0 || m == 0) {
            return Err(LabelError::InvalidFactor);
        }
        factors.sort_unstable_by(|x, y| y.cmp(x));
        Ok(Self { factors })
    }

    pub fn factors(&self) -> &[(usize, usize)] {
        &self.factors
    }

    /// `Σ a_i n_i`, the rank the type decomposes.
    pub fn total(&self) -> usize {
        self.factors.iter().map(|&(a, m)| a * m).sum()
    }

    /// The multiplicities `n_i` in factor order; the composition a
    /// multipartition for this type must fit.
    pub fn multiplicities(&self) -> Vec<usize> {
        self.factors.iter().map(|&(_, m)| m).collect()
    }
}

impl fmt::Display for CentralizerType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pieces: Vec<String> = self
            .factors
            .iter()
            .map(|&(a, m)| format!("GL_{m}(q^{a})"))
            .collect();
        write!(f, "{}", pieces.join(" x "))
    }
}

/// Every centralizer type of rank `n`, each exactly once, in descending
/// lexicographic order of the canonical factor list.
pub fn centralizer_types(n: usize) -> Vec<CentralizerType> {
    // Candidate factors in canonical (descending) order; a multiset is a
    // weakly decreasing sequence of candidates.
    let mut candidates: Vec<(usize, usize)> = Vec::new();
    for a in 1..=n {
        for m in 1..=n / a {
            candidates.push((a, m));
        }
    }
    candidates.sort_unstable_by(|x, y| y.cmp(x));

    fn rec(
        remaining: usize,
        start: usize,
        candidates: &[(usize, usize)],
        stack: &mut Vec<(usize, usize)>,
        out: &mut Vec<CentralizerType>,
    ) {
        if remaining == 0 {
            out.push(CentralizerType { factors: stack.clone() });
            return;
        }
        for idx in start..candidates.len() {
            let (a, m) = candidates[idx];
            if a * m <= remaining {
                stack.push((a, m));
                rec(remaining - a * m, idx, candidates, stack, out);
                stack.pop();
            }
        }
    }

    let mut out = Vec::new();
    rec(n, 0, &candidates, &mut Vec::new(), &mut out);
    out
}

/// The two indexing conventions for unipotent principal-series labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Convention {
    #[serde(rename = "CPS")]
    Cps,
    #[serde(rename = "DD")]
    Dd,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Convention::Cps => write!(f, "CPS"),
            Convention::Dd => write!(f, "DD"),
        }
    }
}

/// The series datum of a module label: unipotent labels carry a single
/// partition of `n`; general labels carry a centralizer type and a matching
/// multipartition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    Unipotent(Partition),
    General {
        centralizer: CentralizerType,
        multipartition: Multipartition,
    },
}

/// An irreducible-module label under one of the two conventions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleLabel {
    series: Series,
    convention: Convention,
}

impl ModuleLabel {
    pub fn unipotent(lambda: Partition, convention: Convention) -> Self {
        Self { series: Series::Unipotent(lambda), convention }
    }

    pub fn general(
        centralizer: CentralizerType,
        multipartition: Multipartition,
        convention: Convention,
    ) -> Result<Self, LabelError> {
        let shape = multipartition.shape();
        let mults = centralizer.multiplicities();
        if shape != mults {
            return Err(LabelError::ShapeMismatch { shape, mults });
        }
        Ok(Self {
            series: Series::General { centralizer, multipartition },
            convention,
        })
    }

    pub fn series(&self) -> &Series {
        &self.series
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn unipotent_partition(&self) -> Option<&Partition> {
        match &self.series {
            Series::Unipotent(lambda) => Some(lambda),
            Series::General { .. } => None,
        }
    }
}

impl Ord for ModuleLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.convention
            .cmp(&other.convention)
            .then_with(|| self.series.cmp(&other.series))
    }
}

impl PartialOrd for ModuleLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.series {
            Series::Unipotent(lambda) => match self.convention {
                Convention::Cps => write!(f, "D(1,({lambda}))"),
                Convention::Dd => write!(f, "D'(1,({lambda}))"),
            },
            Series::General { centralizer, multipartition } => {
                write!(f, "D(s:{centralizer}, {multipartition})")
            }
        }
    }
}

// Wire format is pinned: unipotent labels serialize as
// {"series":"unipotent","convention":"CPS","partition":[...]}.
impl Serialize for ModuleLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match &self.series {
            Series::Unipotent(lambda) => {
                let mut st = serializer.serialize_struct("ModuleLabel", 3)?;
                st.serialize_field("series", "unipotent")?;
                st.serialize_field("convention", &self.convention)?;
                st.serialize_field("partition", lambda)?;
                st.end()
            }
            Series::General { centralizer, multipartition } => {
                let mut st = serializer.serialize_struct("ModuleLabel", 4)?;
                st.serialize_field("series", "general")?;
                st.serialize_field("convention", &self.convention)?;
                st.serialize_field("centralizer", centralizer.factors())?;
                st.serialize_field("multipartition", multipartition)?;
                st.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for ModuleLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct LabelVisitor;

        impl<'de> Visitor<'de> for LabelVisitor {
            type Value = ModuleLabel;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a module label object")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Self::Value, A::Error> {
                let mut series: Option<String> = None;
                let mut convention: Option<Convention> = None;
                let mut partition: Option<Partition> = None;
                let mut centralizer: Option<Vec<(usize, usize)>> = None;
                let mut multipartition: Option<Multipartition> = None;
                while let Some(key) = map.next_key::<String>()? {
                    match key.as_str() {
                        "series" => series = Some(map.next_value()?),
                        "convention" => convention = Some(map.next_value()?),
                        "partition" => partition = Some(map.next_value()?),
                        "centralizer" => centralizer = Some(map.next_value()?),
                        "multipartition" => multipartition = Some(map.next_value()?),
                        other => return Err(de::Error::unknown_field(other, &[])),
                    }
                }
                let series = series.ok_or_else(|| de::Error::missing_field("series"))?;
                let convention =
                    convention.ok_or_else(|| de::Error::missing_field("convention"))?;
                match series.as_str() {
                    "unipotent" => {
                        let lambda =
                            partition.ok_or_else(|| de::Error::missing_field("partition"))?;
                        Ok(ModuleLabel::unipotent(lambda, convention))
                    }
                    "general" => {
                        let factors =
                            centralizer.ok_or_else(|| de::Error::missing_field("centralizer"))?;
                        let mp = multipartition
                            .ok_or_else(|| de::Error::missing_field("multipartition"))?;
                        let ct = CentralizerType::new(factors).map_err(de::Error::custom)?;
                        ModuleLabel::general(ct, mp, convention).map_err(de::Error::custom)
                    }
                    other => Err(de::Error::custom(format!("unknown series {other:?}"))),
                }
            }
        }

        deserializer.deserialize_map(LabelVisitor)
    }
}

/// Translates a DD unipotent label `D'(1,λ)` (with `λ` `l`-regular) to the
/// CPS label `D(1,λ')`.
pub fn dd_to_cps(label: &ModuleLabel, l: usize) -> Result<ModuleLabel, LabelError> {
    match (&label.series, label.convention) {
        (Series::Unipotent(lambda), Convention::Dd) => {
            if !lambda.is_l_regular(l) {
                return Err(LabelError::NotDdPrincipalSeries);
            }
            Ok(ModuleLabel::unipotent(lambda.conjugate(), Convention::Cps))
        }
        _ => Err(LabelError::WrongLabelKind { expected: "DD" }),
    }
}

/// Inverse of [`dd_to_cps`]: takes a CPS unipotent label `D(1,λ)` with `λ`
/// `l`-restricted back to the DD label `D'(1,λ')`.
pub fn cps_to_dd(label: &ModuleLabel, l: usize) -> Result<ModuleLabel, LabelError> {
    match (&label.series, label.convention) {
        (Series::Unipotent(lambda), Convention::Cps) => {
            if !lambda.is_l_restricted(l) {
                return Err(LabelError::NotCpsPrincipalSeries);
            }
            Ok(ModuleLabel::unipotent(lambda.conjugate(), Convention::Dd))
        }
        _ => Err(LabelError::WrongLabelKind { expected: "CPS" }),
    }
}
