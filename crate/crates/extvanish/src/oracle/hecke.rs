//! The Iwahori-Hecke algebra of `S_n` over `F_r` with the parameter
//! specialized to `q mod r`, and the Specht right ideal
//! `S^λ = x_λ · τ_{w0λ} · y_{λ'} · H`.
//!
//! Basis elements are `τ_w` for `w` in `S_n`. Right multiplication by a
//! generator follows `τ_w · τ_s = τ_{ws}` when the length goes up, and
//! `q̄·τ_{ws} + (q̄-1)·τ_w` otherwise. The sign element uses the exponent
//! convention `y_J = Σ (-q̄)^{-l(w)} τ_w`; this is the reading under which
//! `y_J · τ_s = -y_J` holds, and the dimension check against the
//! hook-length count would fail loudly under the opposite sign.

use std::collections::{BTreeMap, HashMap};

use crate::modular::ModularParams;
use crate::partitions::Partition;

use super::fp::{FpMatrix, PrimeField, RowSpace};
use super::perm::{all_permutations, Perm};
use super::OracleError;

/// Default cap on the symmetric-group rank; the spanning step materializes
/// layers of the `n!`-dimensional regular module, which is the binding
/// memory constraint.
pub const DEFAULT_MAX_RANK: usize = 7;

/// A sparse element of the specialized Hecke algebra: a map from basis
/// permutations to nonzero scalars in `F_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    r: u64,
    q_res: u64,
    coeffs: BTreeMap<Perm, u64>,
}

impl HeckeElement {
    pub fn zero(n: usize, params: &ModularParams) -> Self {
        Self { n, r: params.r, q_res: params.q_res(), coeffs: BTreeMap::new() }
    }

    /// The basis element `τ_w`.
    pub fn basis(w: Perm, params: &ModularParams) -> Self {
        let mut out = Self::zero(w.n(), params);
        out.coeffs.insert(w, 1);
        out
    }

    /// The identity `τ_1`.
    pub fn one(n: usize, params: &ModularParams) -> Self {
        Self::basis(Perm::identity(n), params)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q_res(&self) -> u64 {
        self.q_res
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficient(&self, w: &Perm) -> u64 {
        self.coeffs.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Perm, u64)> {
        self.coeffs.iter().map(|(w, &c)| (w, c))
    }

    fn field(&self) -> PrimeField {
        PrimeField::new(self.r)
    }

    pub fn add(&self, other: &HeckeElement) -> HeckeElement {
        assert_eq!((self.n, self.r), (other.n, other.r));
        let field = self.field();
        let mut coeffs = self.coeffs.clone();
        for (w, &c) in &other.coeffs {
            let entry = coeffs.entry(w.clone()).or_insert(0);
            *entry = field.add(*entry, c);
        }
        coeffs.retain(|_, c| *c != 0);
        HeckeElement { coeffs, ..self.clone() }
    }

    pub fn scale(&self, c: u64) -> HeckeElement {
        let field = self.field();
        let c = field.reduce(c);
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            for (w, &a) in &self.coeffs {
                coeffs.insert(w.clone(), field.mul(a, c));
            }
        }
        HeckeElement { coeffs, ..self.clone() }
    }

    /// Right multiplication by the generator `τ_s`, `0 <= s < n-1`, by linear
    /// extension of the quadratic rule.
    pub fn right_multiply_gen(&self, s: usize) -> HeckeElement {
        assert!(s + 1 < self.n, "generator index out of range");
        let field = self.field();
        let q = self.q_res;
        let qm1 = field.sub(q, 1);
        let mut coeffs: BTreeMap<Perm, u64> = BTreeMap::new();
        let mut bump = |w: Perm, c: u64| {
            if c == 0 {
                return;
            }
            let entry = coeffs.entry(w).or_insert(0);
            *entry = field.add(*entry, c);
        };
        for (w, &c) in &self.coeffs {
            let ws = w.times_gen(s);
            if ws.length() > w.length() {
                bump(ws, c);
            } else {
                bump(ws, field.mul(q, c));
                bump(w.clone(), field.mul(qm1, c));
            }
        }
        coeffs.retain(|_, c| *c != 0);
        HeckeElement { coeffs, ..self.clone() }
    }

    /// Right multiplication by `τ_w` along a reduced word of `w`.
    pub fn right_multiply_basis(&self, w: &Perm) -> HeckeElement {
        w.reduced_word()
            .into_iter()
            .fold(self.clone(), |acc, s| acc.right_multiply_gen(s))
    }
}

/// All elements of the Young subgroup `W_λ` (block permutations), as
/// elements of `S_n` for `n = |λ|`.
pub(crate) fn young_subgroup(lambda: &Partition) -> Vec<Perm> {
    let n = lambda.n();
    let mut result = vec![Perm::identity(n)];
    let mut offset = 0;
    for &part in lambda.parts() {
        let block = all_permutations(part);
        let mut next = Vec::with_capacity(result.len() * block.len());
        for base in &result {
            for bp in &block {
                let mut images = base.images().to_vec();
                for i in 0..part {
                    images[offset + i] = offset + bp.image(i);
                }
                next.push(Perm::from_images(images).expect("block permutation"));
            }
        }
        result = next;
        offset += part;
    }
    result
}

/// The generator indices lying inside the blocks of `λ` (the subset `J(λ)`).
pub(crate) fn parabolic_generators(lambda: &Partition) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut offset = 0;
    for &part in lambda.parts() {
        for s in offset..offset + part.saturating_sub(1) {
            gens.push(s);
        }
        offset += part;
    }
    gens
}

/// `x_λ = Σ_{w ∈ W_λ} τ_w`.
pub fn x_element(lambda: &Partition, params: &ModularParams) -> HeckeElement {
    let mut out = HeckeElement::zero(lambda.n(), params);
    for w in young_subgroup(lambda) {
        out.coeffs.insert(w, 1);
    }
    out
}

/// `y_λ = Σ_{w ∈ W_λ} (-q̄)^{-l(w)} τ_w`.
pub fn y_element(lambda: &Partition, params: &ModularParams) -> HeckeElement {
    let mut out = HeckeElement::zero(lambda.n(), params);
    let field = PrimeField::new(params.r);
    let base = field.neg(field.inv(out.q_res));
    for w in young_subgroup(lambda) {
        let c = field.pow(base, w.length() as u64);
        out.coeffs.insert(w, c);
    }
    out
}

/// Index of all of `S_n` with generator multiplication tables, backing dense
/// computations in the regular module.
pub(crate) struct GroupIndex {
    pub n: usize,
    pub size: usize,
    pub perms: Vec<Perm>,
    index_of: HashMap<Vec<usize>, usize>,
    /// `right[s][i] = (index of perms[i] * s, length went up)`
    pub right: Vec<Vec<(usize, bool)>>,
}

impl GroupIndex {
    pub fn new(n: usize) -> Self {
        let perms = all_permutations(n);
        let size = perms.len();
        let index_of: HashMap<Vec<usize>, usize> = perms
            .iter()
            .enumerate()
            .map(|(i, w)| (w.images().to_vec(), i))
            .collect();
        let gens = n.saturating_sub(1);
        let mut right = vec![vec![(0usize, false); size]; gens];
        for (i, w) in perms.iter().enumerate() {
            for (s, table) in right.iter_mut().enumerate() {
                let ws = w.times_gen(s);
                let j = index_of[ws.images()];
                table[i] = (j, ws.length() > w.length());
            }
        }
        Self { n, size, perms, index_of, right }
    }

    pub fn index(&self, w: &Perm) -> usize {
        self.index_of[w.images()]
    }
}

/// Dense right multiplication by `τ_s` in the regular module.
pub(crate) fn dense_times_gen(
    field: &PrimeField,
    q_res: u64,
    group: &GroupIndex,
    v: &[u64],
    s: usize,
) -> Vec<u64> {
    let qm1 = field.sub(q_res, 1);
    let mut out = vec![0u64; v.len()];
    let table = &group.right[s];
    for (i, &c) in v.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let (j, up) = table[i];
        if up {
            out[j] = field.add(out[j], c);
        } else {
            out[j] = field.add(out[j], field.mul(q_res, c));
            out[i] = field.add(out[i], field.mul(qm1, c));
        }
    }
    out
}

/// Exact matrix model of the Specht module: an `F_r`-basis of the right
/// ideal inside the regular module and the right action of each generator.
#[derive(Debug, Clone)]
pub struct SpechtModuleRep {
    pub lambda: Partition,
    pub dim: usize,
    /// Reduced row echelon basis; each row has length `n!`.
    pub basis: Vec<Vec<u64>>,
    /// One `dim x dim` matrix per generator, acting on coordinate rows.
    pub gen_actions: Vec<FpMatrix>,
    pub r: u64,
    pub q_res: u64,
}

/// Builds `S^λ` with the default rank bound.
pub fn specht_module(
    lambda: &Partition,
    params: &ModularParams,
) -> Result<SpechtModuleRep, OracleError> {
    specht_module_bounded(lambda, params, DEFAULT_MAX_RANK)
}

/// Builds `S^λ = x_λ τ_{w0λ} y_{λ'} H` over `F_r`: spans `z_λ τ_w` over all
/// `w`, row-reduces to a basis, and derives generator action matrices. The
/// dimension must equal the standard-tableau count or the construction
/// aborts.
pub fn specht_module_bounded(
    lambda: &Partition,
    params: &ModularParams,
    max_rank: usize,
) -> Result<SpechtModuleRep, OracleError> {
    let n = lambda.n();
    if n > max_rank {
        return Err(OracleError::RankBound { n, max: max_rank });
    }
    let field = PrimeField::new(params.r);
    let q_res = params.q_res();
    let group = GroupIndex::new(n);

    // z = x_λ · τ_{w0λ} · y_{λ'}, built densely over the regular module.
    let mut z = vec![0u64; group.size];
    for w in young_subgroup(lambda) {
        z[group.index(&w)] = 1;
    }
    for s in Perm::longest_in_young_subgroup(lambda).reduced_word() {
        z = dense_times_gen(&field, q_res, &group, &z, s);
    }
    let conj = lambda.conjugate();
    let neg_q_inv = field.neg(field.inv(q_res));
    let mut product = vec![0u64; group.size];
    for u in young_subgroup(&conj) {
        let coeff = field.pow(neg_q_inv, u.length() as u64);
        let mut zu = z.clone();
        for s in u.reduced_word() {
            zu = dense_times_gen(&field, q_res, &group, &zu, s);
        }
        for (acc, x) in product.iter_mut().zip(&zu) {
            *acc = field.add(*acc, field.mul(coeff, *x));
        }
    }
    let z = product;

    // Span {z · τ_w : w ∈ S_n} layer by layer along the weak right order;
    // each permutation is produced exactly once from a shorter neighbor.
    let gens = n.saturating_sub(1);
    let mut space = RowSpace::new(field, group.size);
    let mut layer: HashMap<usize, Vec<u64>> = HashMap::new();
    layer.insert(group.index(&Perm::identity(n)), z);
    while !layer.is_empty() {
        for v in layer.values() {
            space.insert(v.clone());
        }
        let mut next: HashMap<usize, Vec<u64>> = HashMap::new();
        for (&idx, v) in &layer {
            for s in 0..gens {
                let (j, up) = group.right[s][idx];
                if up && !next.contains_key(&j) {
                    next.insert(j, dense_times_gen(&field, q_res, &group, v, s));
                }
            }
        }
        layer = next;
    }

    let expected = lambda.standard_tableau_count();
    let dim = space.rank();
    if dim as u64 != expected {
        return Err(OracleError::DimensionMismatch {
            lambda: lambda.to_string(),
            got: dim,
            expected,
        });
    }

    let basis: Vec<Vec<u64>> = space.rows().to_vec();
    let mut gen_actions = Vec::with_capacity(gens);
    for s in 0..gens {
        let mut rows = Vec::with_capacity(dim);
        for b in &basis {
            let image = dense_times_gen(&field, q_res, &group, b, s);
            let coords = space.coordinates(&image).ok_or(OracleError::NotClosed)?;
            rows.push(coords);
        }
        gen_actions.push(FpMatrix::from_rows(rows));
    }

    Ok(SpechtModuleRep {
        lambda: lambda.clone(),
        dim,
        basis,
        gen_actions,
        r: params.r,
        q_res,
    })
}
