//! Meataxe irreducibility test for matrix modules over `F_r`.
//!
//! Strategy: draw random elements of the enveloping algebra, factor their
//! characteristic polynomials, and spin null vectors of irreducible-factor
//! evaluations. A proper spin proves reducibility outright. When the nullity
//! of `p(A)` equals `deg p`, a full spin on both the module and its transpose
//! is conclusive for irreducibility (Norton's criterion). If the random
//! phase stays inconclusive, an exhaustive spin over all projective lines
//! settles the question whenever `(r^dim - 1)/(r - 1)` is within budget.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::fp::{row_kernel, FpMatrix, PrimeField, RowSpace};
use super::hecke::SpechtModuleRep;
use super::poly::{factor, Poly};
use super::OracleError;

const RANDOM_ATTEMPTS: usize = 64;
const EXHAUSTIVE_BUDGET: u128 = 1_000_000;

/// Decides whether the module has a proper nonzero invariant subspace over
/// `F_r`. Deterministic for a fixed seed, and the verdict itself is
/// seed-independent.
pub fn meataxe_irreducible(rep: &SpechtModuleRep, seed: u64) -> Result<bool, OracleError> {
    let field = PrimeField::new(rep.r);
    algebra_irreducible(&field, &rep.gen_actions, rep.dim, seed)
}

pub(crate) fn algebra_irreducible(
    field: &PrimeField,
    gens: &[FpMatrix],
    dim: usize,
    seed: u64,
) -> Result<bool, OracleError> {
    assert!(dim >= 1, "module must be nonzero");
    if dim == 1 {
        return Ok(true);
    }
    if gens.is_empty() {
        // No operators at all: every line is invariant.
        return Ok(false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_ATTEMPTS {
        let a = random_algebra_element(field, gens, dim, &mut rng);
        let mut factors = factor(field, &charpoly(field, &a));
        // Factors whose nullity can match their degree come first: charpoly
        // multiplicity one guarantees it.
        factors.sort_by_key(|&(ref p, m)| (m != 1, p.degree()));
        for (p, _) in &factors {
            let b = p.eval_matrix(field, &a);
            let kernel = row_kernel(field, &b);
            if kernel.is_empty() {
                continue;
            }
            // Any proper spin settles reducibility regardless of nullity.
            for v in &kernel {
                if spin(field, v, gens).rank() < dim {
                    return Ok(false);
                }
            }
            if kernel.len() == p.degree().unwrap_or(0) {
                // Norton: check the transpose module from the dual null space.
                let gens_t: Vec<FpMatrix> = gens.iter().map(FpMatrix::transpose).collect();
                let kernel_t = row_kernel(field, &b.transpose());
                debug_assert_eq!(kernel_t.len(), kernel.len());
                if spin(field, &kernel_t[0], &gens_t).rank() < dim {
                    return Ok(false);
                }
                return Ok(true);
            }
        }
    }
    match projective_line_count(field.modulus(), dim) {
        Some(count) if count <= EXHAUSTIVE_BUDGET => {
            Ok(!exhaustive_reducible(field, gens, dim))
        }
        _ => Err(OracleError::Inconclusive { dim }),
    }
}

/// Submodule generated by `start` under the right action of `gens`, as a row
/// space. Stops early once the whole space is reached.
pub(crate) fn spin(field: &PrimeField, start: &[u64], gens: &[FpMatrix]) -> RowSpace {
    let dim = start.len();
    let mut space = RowSpace::new(*field, dim);
    if !space.insert(start.to_vec()) {
        return space;
    }
    let mut queue: Vec<Vec<u64>> = vec![start.to_vec()];
    while let Some(v) = queue.pop() {
        if space.rank() == dim {
            break;
        }
        for g in gens {
            let w = g.apply_row(field, &v);
            if space.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    space
}

fn random_algebra_element(
    field: &PrimeField,
    gens: &[FpMatrix],
    dim: usize,
    rng: &mut ChaCha8Rng,
) -> FpMatrix {
    let mut acc = FpMatrix::zeros(dim, dim);
    let terms = rng.gen_range(2..=4);
    for _ in 0..terms {
        let mut word = FpMatrix::identity(dim);
        for _ in 0..rng.gen_range(1..=3) {
            word = word.mul(field, &gens[rng.gen_range(0..gens.len())]);
        }
        let c = rng.gen_range(1..field.modulus());
        acc = acc.add(field, &word.scale(field, c));
    }
    if rng.gen_bool(0.5) {
        let c = rng.gen_range(0..field.modulus());
        acc = acc.add(field, &FpMatrix::identity(dim).scale(field, c));
    }
    acc
}

/// Characteristic polynomial via reduction to Hessenberg form followed by
/// the leading-minor recurrence.
pub(crate) fn charpoly(field: &PrimeField, a: &FpMatrix) -> Poly {
    assert_eq!(a.rows, a.cols);
    let n = a.rows;
    let mut h = a.clone();
    for m in 0..n.saturating_sub(2) {
        let Some(pivot) = (m + 1..n).find(|&i| h.get(i, m) != 0) else {
            continue;
        };
        if pivot != m + 1 {
            for j in 0..n {
                let (x, y) = (h.get(pivot, j), h.get(m + 1, j));
                h.set(pivot, j, y);
                h.set(m + 1, j, x);
            }
            for i in 0..n {
                let (x, y) = (h.get(i, pivot), h.get(i, m + 1));
                h.set(i, pivot, y);
                h.set(i, m + 1, x);
            }
        }
        let inv = field.inv(h.get(m + 1, m));
        for i in m + 2..n {
            let t = field.mul(h.get(i, m), inv);
            if t == 0 {
                continue;
            }
            for j in 0..n {
                let v = field.sub(h.get(i, j), field.mul(t, h.get(m + 1, j)));
                h.set(i, j, v);
            }
            for j in 0..n {
                let v = field.add(h.get(j, m + 1), field.mul(t, h.get(j, i)));
                h.set(j, m + 1, v);
            }
        }
    }
    // p_m(x) = (x - h[m,m]) p_{m-1}(x)
    //          - sum_k h[k,m] (prod_{j=k..m-1} h[j+1,j]) p_{k-1}(x), 1-based.
    let mut polys: Vec<Poly> = Vec::with_capacity(n + 1);
    polys.push(Poly::one());
    for m in 1..=n {
        let linear = Poly::from_coeffs(vec![field.neg(h.get(m - 1, m - 1)), 1]);
        let mut pm = linear.mul(field, &polys[m - 1]);
        let mut subdiag = 1u64;
        for k in (1..m).rev() {
            subdiag = field.mul(subdiag, h.get(k, k - 1));
            let coeff = field.mul(h.get(k - 1, m - 1), subdiag);
            if coeff != 0 {
                pm = pm.sub(field, &polys[k - 1].scale(field, coeff));
            }
        }
        polys.push(pm);
    }
    polys.pop().expect("charpoly of the full matrix")
}

/// `1 + r + ... + r^(dim-1)`, the number of lines in `F_r^dim`; `None` once
/// it exceeds twice the exhaustive budget.
fn projective_line_count(r: u64, dim: usize) -> Option<u128> {
    let mut count: u128 = 0;
    let mut power: u128 = 1;
    for _ in 0..dim {
        count += power;
        if count > 2 * EXHAUSTIVE_BUDGET {
            return None;
        }
        power *= r as u128;
    }
    Some(count)
}

/// Spins one representative of every line of `F_r^dim`; true iff some proper
/// invariant subspace shows up.
fn exhaustive_reducible(field: &PrimeField, gens: &[FpMatrix], dim: usize) -> bool {
    let r = field.modulus();
    for lead in 0..dim {
        // Representatives have first nonzero coordinate 1 at position `lead`
        // and free coordinates after it.
        let mut v = vec![0u64; dim];
        v[lead] = 1;
        'lines: loop {
            if spin(field, &v, gens).rank() < dim {
                return true;
            }
            // Odometer over the tail coordinates lead+1..dim.
            let mut pos = dim;
            loop {
                if pos == lead + 1 {
                    break 'lines;
                }
                pos -= 1;
                v[pos] += 1;
                if v[pos] < r {
                    break;
                }
                v[pos] = 0;
            }
        }
    }
    false
}
