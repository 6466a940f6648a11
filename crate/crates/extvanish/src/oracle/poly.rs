//! Dense univariate polynomials over `F_p`: arithmetic, gcd, squarefree
//! decomposition, and Berlekamp factorization into irreducibles.

use super::fp::{row_kernel, FpMatrix, PrimeField};

/// Coefficients in ascending degree order with no trailing zeros; the zero
/// polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(Vec<u64>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![1])
    }

    pub fn x() -> Self {
        Poly(vec![0, 1])
    }

    pub fn constant(field: &PrimeField, c: u64) -> Self {
        Poly::from_coeffs(vec![field.reduce(c)])
    }

    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        *self.0.last().expect("nonzero polynomial")
    }

    pub fn add(&self, field: &PrimeField, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let coeffs = (0..n)
            .map(|i| {
                field.add(
                    self.0.get(i).copied().unwrap_or(0),
                    other.0.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn sub(&self, field: &PrimeField, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let coeffs = (0..n)
            .map(|i| {
                field.sub(
                    self.0.get(i).copied().unwrap_or(0),
                    other.0.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn mul(&self, field: &PrimeField, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![0u64; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                coeffs[i + j] = field.add(coeffs[i + j], field.mul(a, b));
            }
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, field: &PrimeField, c: u64) -> Poly {
        Poly::from_coeffs(self.0.iter().map(|&a| field.mul(a, c)).collect())
    }

    pub fn monic(&self, field: &PrimeField) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(field, field.inv(self.leading()))
    }

    /// Euclidean division: returns `(quotient, remainder)`.
    pub fn div_rem(&self, field: &PrimeField, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.0.len() - 1;
        if self.0.len() < divisor.0.len() {
            return (Poly::zero(), self.clone());
        }
        let mut rem = self.0.clone();
        let mut quot = vec![0u64; self.0.len() - dd];
        let lead_inv = field.inv(divisor.leading());
        for i in (dd..rem.len()).rev() {
            let c = field.mul(rem[i], lead_inv);
            if c == 0 {
                continue;
            }
            quot[i - dd] = c;
            for (j, &b) in divisor.0.iter().enumerate() {
                rem[i - dd + j] = field.sub(rem[i - dd + j], field.mul(c, b));
            }
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    pub fn rem(&self, field: &PrimeField, divisor: &Poly) -> Poly {
        self.div_rem(field, divisor).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, field: &PrimeField, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(field, &b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic(field)
        }
    }

    pub fn derivative(&self, field: &PrimeField) -> Poly {
        let coeffs = self
            .0
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| field.mul(field.reduce(i as u64), a))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// `self^exp mod modulus` by binary exponentiation.
    pub fn pow_mod(&self, field: &PrimeField, mut exp: u64, modulus: &Poly) -> Poly {
        let mut base = self.rem(field, modulus);
        let mut acc = Poly::one().rem(field, modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(field, &base).rem(field, modulus);
            }
            base = base.mul(field, &base).rem(field, modulus);
            exp >>= 1;
        }
        acc
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, field: &PrimeField, m: &FpMatrix) -> FpMatrix {
        assert_eq!(m.rows, m.cols);
        let n = m.rows;
        let mut acc = FpMatrix::zeros(n, n);
        for &c in self.0.iter().rev() {
            acc = acc.mul(field, m);
            if c != 0 {
                acc = acc.add(field, &FpMatrix::identity(n).scale(field, c));
            }
        }
        acc
    }
}

/// Squarefree decomposition in characteristic `p`: returns monic squarefree
/// factors with multiplicities, product over `(f_i)^(m_i)` giving the monic
/// part of the input.
fn squarefree_decomposition(field: &PrimeField, f: &Poly) -> Vec<(Poly, usize)> {
    let p = field.modulus() as usize;
    let f = f.monic(field);
    if f.degree() == Some(0) {
        return Vec::new();
    }
    let deriv = f.derivative(field);
    if deriv.is_zero() {
        // f = g(x^p); in the prime field the coefficients are Frobenius-fixed,
        // so g just reads off every p-th coefficient.
        let coeffs: Vec<u64> = f.coeffs().iter().step_by(p).copied().collect();
        let g = Poly::from_coeffs(coeffs);
        return squarefree_decomposition(field, &g)
            .into_iter()
            .map(|(q, m)| (q, m * p))
            .collect();
    }
    let mut out: Vec<(Poly, usize)> = Vec::new();
    let c = f.gcd(field, &deriv);
    let mut w = f.div_rem(field, &c).0;
    let mut c = c;
    let mut multiplicity = 1usize;
    // Yun-style peeling of the squarefree parts of multiplicity not divisible
    // by p; whatever remains is a p-th power handled recursively.
    while w.degree() != Some(0) {
        let y = w.gcd(field, &c);
        let fac = w.div_rem(field, &y).0;
        if fac.degree().map_or(false, |d| d > 0) {
            out.push((fac.monic(field), multiplicity));
        }
        w = y.clone();
        c = c.div_rem(field, &y).0;
        multiplicity += 1;
    }
    // The leftover c collects exactly the factors whose multiplicity is
    // divisible by p; its derivative vanishes, so the recursion takes the
    // p-th root and scales the multiplicities itself.
    if c.degree().map_or(false, |d| d > 0) {
        debug_assert!(c.derivative(field).is_zero());
        out.extend(squarefree_decomposition(field, &c));
    }
    out
}

/// Berlekamp splitting of a monic squarefree polynomial into monic
/// irreducible factors.
fn berlekamp_squarefree(field: &PrimeField, f: &Poly) -> Vec<Poly> {
    let d = match f.degree() {
        Some(d) if d >= 2 => d,
        Some(1) => return vec![f.clone()],
        _ => return Vec::new(),
    };
    let p = field.modulus();
    // Frobenius matrix: row i holds x^(i*p) mod f.
    let xp = Poly::x().pow_mod(field, p, f);
    let mut q = FpMatrix::zeros(d, d);
    let mut power = Poly::one();
    for i in 0..d {
        for (j, &c) in power.coeffs().iter().enumerate() {
            q.set(i, j, c);
        }
        power = power.mul(field, &xp).rem(field, f);
    }
    let b = {
        let id = FpMatrix::identity(d);
        // Q - I, acting on coefficient rows.
        let mut m = q.clone();
        for i in 0..d {
            for j in 0..d {
                m.set(i, j, field.sub(q.get(i, j), id.get(i, j)));
            }
        }
        m
    };
    let kernel = row_kernel(field, &b);
    if kernel.len() <= 1 {
        return vec![f.clone()];
    }
    // Any non-constant kernel element splits f over some shift c.
    let v = kernel
        .iter()
        .map(|coeffs| Poly::from_coeffs(coeffs.clone()))
        .find(|poly| poly.degree().map_or(false, |deg| deg >= 1))
        .expect("kernel of dimension > 1 contains a non-constant element");
    for c in 0..p {
        let shifted = v.sub(field, &Poly::constant(field, c));
        let g = f.gcd(field, &shifted);
        if let Some(deg) = g.degree() {
            if deg >= 1 && deg < d {
                let h = f.div_rem(field, &g).0;
                let mut out = berlekamp_squarefree(field, &g);
                out.extend(berlekamp_squarefree(field, &h));
                return out;
            }
        }
    }
    unreachable!("a non-constant Berlekamp subalgebra element always splits f")
}

/// Full factorization of a nonzero polynomial into monic irreducibles with
/// multiplicities (the leading coefficient is dropped).
pub fn factor(field: &PrimeField, f: &Poly) -> Vec<(Poly, usize)> {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let mut out = Vec::new();
    for (squarefree, multiplicity) in squarefree_decomposition(field, f) {
        for factor in berlekamp_squarefree(field, &squarefree) {
            out.push((factor, multiplicity));
        }
    }
    out.sort_by(|(a, ma), (b, mb)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
            .then_with(|| ma.cmp(mb))
    });
    out
}
