//! Integer partitions: enumeration, conjugation, dominance order, and
//! `l`-regularity / `l`-restriction.
//!
//! Partitions are stored without trailing zeros, so structural equality is
//! canonical equality. Enumeration is reverse-lexicographic (largest part
//! first), and [`Partition`]'s `Ord` follows that enumeration order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing and positive, got {0:?}")]
    NotWeaklyDecreasing(Vec<usize>),
    #[error("incomparable weights: sizes {0} and {1} differ")]
    IncomparableWeights(usize, usize),
    #[error("invalid partition syntax: {0:?}")]
    Parse(String),
}

/// A weakly decreasing sequence of positive integers; the empty sequence is
/// the unique partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

impl Partition {
    /// Builds a partition from `parts`. Trailing zeros are stripped; any other
    /// zero or an increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotWeaklyDecreasing(parts));
        }
        let n = parts.iter().sum();
        Ok(Self { parts, n })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new(), n: 0 }
    }

    /// The one-row partition `(n)`; `row(0)` is the empty partition.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self { parts: vec![n], n }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self { parts: vec![1; n], n }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of (nonzero) parts.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end. Zero padding keeps prefix-sum
    /// comparisons uniform.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The dual partition: `conjugate()[j] = #{i : parts[i] > j}`. An
    /// involution.
    pub fn conjugate(&self) -> Partition {
        let rows = self.parts.len();
        let width = self.part(0);
        let mut parts = Vec::with_capacity(width);
        for j in 0..width {
            // Parts are weakly decreasing, so the count is a prefix length.
            let mut count = 0;
            for i in 0..rows {
                if self.parts[i] > j {
                    count += 1;
                } else {
                    break;
                }
            }
            parts.push(count);
        }
        Partition { parts, n: self.n }
    }

    /// True iff no part value occurs `l` or more times. Requires `l >= 2`.
    pub fn is_l_regular(&self, l: usize) -> bool {
        debug_assert!(l >= 2, "l-regularity needs l >= 2");
        let mut run = 0usize;
        let mut prev = 0usize;
        for &p in &self.parts {
            if p == prev {
                run += 1;
            } else {
                run = 1;
                prev = p;
            }
            if run >= l {
                return false;
            }
        }
        true
    }

    /// True iff the dual partition is `l`-regular.
    pub fn is_l_restricted(&self, l: usize) -> bool {
        self.conjugate().is_l_regular(l)
    }

    /// Dominance order: true iff every prefix sum of `self` is at most the
    /// matching prefix sum of `other` (i.e. `self ⊴ other`). Only defined for
    /// partitions of the same integer.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool, PartitionError> {
        if self.n != other.n {
            return Err(PartitionError::IncomparableWeights(self.n, other.n));
        }
        let k = self.parts.len().max(other.parts.len());
        let mut sum_self = 0usize;
        let mut sum_other = 0usize;
        for i in 0..k {
            sum_self += self.part(i);
            sum_other += other.part(i);
            if sum_self > sum_other {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All partitions `mu` of the same integer with `mu ⊴ self`, in
    /// enumeration order; includes `self`.
    pub fn dominated_set(&self) -> Vec<Partition> {
        enumerate_partitions(self.n)
            .into_iter()
            .filter(|mu| mu.dominated_by(self).expect("equal sizes"))
            .collect()
    }

    /// Number of standard Young tableaux of this shape, by the hook length
    /// formula `n! / prod h_ij`.
    pub fn standard_tableau_count(&self) -> u64 {
        if self.is_empty() {
            return 1;
        }
        let conj = self.conjugate();
        let mut hooks: Vec<u128> = Vec::with_capacity(self.n);
        for (i, &len) in self.parts.iter().enumerate() {
            for j in 0..len {
                hooks.push((len + conj.parts()[j] - i - j - 1) as u128);
            }
        }
        // Divide n! by the hook product with running gcd cancellation so the
        // numerator never grows past the final value times one factor.
        let mut num: u128 = 1;
        for k in 1..=(self.n as u128) {
            num *= k;
            for h in hooks.iter_mut().filter(|h| **h > 1) {
                let g = gcd_u128(num, *h);
                num /= g;
                *h /= g;
            }
        }
        debug_assert!(hooks.iter().all(|&h| h == 1), "hook product must divide n!");
        u64::try_from(num).expect("tableau count fits in u64")
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Every partition of `n`, in reverse-lexicographic order (largest first);
/// the length of the result is the partition function `p(n)`.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: stack.clone(), n: stack.iter().sum() });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            stack.push(p);
            rec(remaining - p, p, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

impl Ord for Partition {
    /// Enumeration order: smaller integers first, then reverse-lexicographic
    /// (so `(4) < (3,1) < (2,2) < ...`).
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    /// Canonical text form: fully expanded, comma separated, e.g. `2,2,1,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts comma-separated parts with exponent shorthand
    /// (`"2^2,1^2"` means `2,2,1,1`), optionally wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|rest| rest.strip_suffix(')'))
            .unwrap_or(trimmed)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in inner.split(',') {
            let token = token.trim();
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (token, "1"),
            };
            let part: usize = base
                .parse()
                .map_err(|_| PartitionError::Parse(s.to_string()))?;
            let count: usize = exp
                .parse()
                .map_err(|_| PartitionError::Parse(s.to_string()))?;
            parts.extend(std::iter::repeat(part).take(count));
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

/// A tuple of partitions indexed by the factors of a centralizer type; the
/// underlying composition (with explicit zeros) is recovered by [`shape`].
///
/// [`shape`]: Multipartition::shape
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        Self { components }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// The composition `(|λ^(1)|, ..., |λ^(m)|)`; entries may be zero.
    pub fn shape(&self) -> Vec<usize> {
        self.components.iter().map(|p| p.n()).collect()
    }

    pub fn total(&self) -> usize {
        self.components.iter().map(|p| p.n()).sum()
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            write!(f, "({c})")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Brute-force standard-tableau count: fill 1..n row by row, keeping the
    /// column-strict growth condition. Independent of the hook formula.
    fn count_standard_tableaux(shape: &Partition) -> u64 {
        fn rec(shape: &[usize], fills: &mut Vec<usize>, placed: usize, total: usize) -> u64 {
            if placed == total {
                return 1;
            }
            let mut count = 0;
            for i in 0..shape.len() {
                if fills[i] < shape[i] && (i == 0 || fills[i - 1] > fills[i]) {
                    fills[i] += 1;
                    count += rec(shape, fills, placed + 1, total);
                    fills[i] -= 1;
                }
            }
            count
        }
        let mut fills = vec![0; shape.num_parts()];
        rec(shape.parts(), &mut fills, 0, shape.n())
    }

    #[test]
    fn enumeration_of_four_matches_reverse_lex() {
        let got = enumerate_partitions(4);
        let want = vec![
            p(&[4]),
            p(&[3, 1]),
            p(&[2, 2]),
            p(&[2, 1, 1]),
            p(&[1, 1, 1, 1]),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn enumeration_of_zero_is_single_empty() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
    }

    #[test]
    fn enumeration_of_six_has_eleven_entries() {
        let got = enumerate_partitions(6);
        assert_eq!(got.len(), 11);
        assert_eq!(got[0], p(&[6]));
        assert_eq!(got[10], p(&[1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn enumeration_counts_match_partition_function() {
        let pn = [1usize, 1, 2, 3, 5, 7, 11, 15, 22, 30];
        for (n, &expect) in pn.iter().enumerate() {
            assert_eq!(enumerate_partitions(n).len(), expect, "p({n})");
        }
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[2, 1, 1]).conjugate(), p(&[3, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(p(&[5]).conjugate(), p(&[1, 1, 1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn conjugate_is_involution_up_to_eight() {
        for n in 0..=8 {
            for lam in enumerate_partitions(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn regularity_examples() {
        assert!(p(&[3, 3]).is_l_regular(3));
        assert!(!p(&[1, 1, 1]).is_l_regular(3));
        assert!(p(&[4, 2]).is_l_regular(3));
        assert!(!p(&[2, 2, 2]).is_l_regular(3));
    }

    #[test]
    fn restricted_set_of_four_at_l_four() {
        let want: Vec<Partition> =
            vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])];
        let got: Vec<Partition> = enumerate_partitions(4)
            .into_iter()
            .filter(|lam| lam.is_l_restricted(4))
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn restricted_set_of_six_at_l_three() {
        // (4,2) belongs: its dual (2,2,1,1) repeats no part three times.
        let got: Vec<Partition> = enumerate_partitions(6)
            .into_iter()
            .filter(|lam| lam.is_l_restricted(3))
            .collect();
        let want = vec![
            p(&[4, 2]),
            p(&[3, 2, 1]),
            p(&[3, 1, 1, 1]),
            p(&[2, 2, 2]),
            p(&[2, 2, 1, 1]),
            p(&[2, 1, 1, 1, 1]),
            p(&[1, 1, 1, 1, 1, 1]),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn single_row_is_never_two_restricted() {
        for n in 2..=8 {
            assert!(!Partition::row(n).is_l_restricted(2));
        }
    }

    #[test]
    fn restricted_iff_dual_regular_exhaustive() {
        for n in 0..=8 {
            for lam in enumerate_partitions(n) {
                for l in 2..=8 {
                    assert_eq!(lam.is_l_restricted(l), lam.conjugate().is_l_regular(l));
                }
            }
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[1, 1, 1, 1]).dominated_by(&p(&[2, 2])).unwrap());
        assert!(p(&[2, 1, 1]).dominated_by(&p(&[2, 2])).unwrap());
        assert!(!p(&[3, 1]).dominated_by(&p(&[2, 2])).unwrap());
        let lam = p(&[3, 2, 1]);
        assert!(lam.dominated_by(&lam).unwrap());
    }

    #[test]
    fn dominance_rejects_different_sizes() {
        let err = p(&[2, 1]).dominated_by(&p(&[2, 2])).unwrap_err();
        assert!(matches!(err, PartitionError::IncomparableWeights(3, 4)));
        assert!(err.to_string().contains("incomparable weights"));
    }

    #[test]
    fn dominance_is_partial_order_up_to_eight() {
        for n in 0..=8 {
            let all = enumerate_partitions(n);
            for a in &all {
                assert!(a.dominated_by(a).unwrap(), "reflexive at {a}");
                for b in &all {
                    if a.dominated_by(b).unwrap() && b.dominated_by(a).unwrap() {
                        assert_eq!(a, b, "antisymmetry at {a}, {b}");
                    }
                    for c in &all {
                        if a.dominated_by(b).unwrap() && b.dominated_by(c).unwrap() {
                            assert!(a.dominated_by(c).unwrap(), "transitivity {a} {b} {c}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dominance_extremes() {
        for n in 1..=8 {
            let top = Partition::row(n);
            let bottom = Partition::column(n);
            for lam in enumerate_partitions(n) {
                assert!(bottom.dominated_by(&lam).unwrap());
                assert!(lam.dominated_by(&top).unwrap());
            }
        }
    }

    #[test]
    fn dominance_reverses_under_conjugation() {
        for n in 0..=8 {
            let all = enumerate_partitions(n);
            for a in &all {
                for b in &all {
                    assert_eq!(
                        a.dominated_by(b).unwrap(),
                        b.conjugate().dominated_by(&a.conjugate()).unwrap(),
                    );
                }
            }
        }
    }

    #[test]
    fn dominated_set_examples() {
        assert_eq!(p(&[1, 1, 1, 1]).dominated_set(), vec![p(&[1, 1, 1, 1])]);
        assert_eq!(
            p(&[2, 2]).dominated_set(),
            vec![p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(
            p(&[2, 2, 1, 1]).dominated_set(),
            vec![p(&[2, 2, 1, 1]), p(&[2, 1, 1, 1, 1]), p(&[1, 1, 1, 1, 1, 1])]
        );
    }

    #[test]
    fn tableau_count_examples() {
        assert_eq!(p(&[7]).standard_tableau_count(), 1);
        assert_eq!(p(&[3, 3]).standard_tableau_count(), 5);
        assert_eq!(p(&[4, 2]).standard_tableau_count(), 9);
    }

    #[test]
    fn tableau_count_matches_brute_force_up_to_seven() {
        for n in 1..=7 {
            for lam in enumerate_partitions(n) {
                assert_eq!(
                    lam.standard_tableau_count(),
                    count_standard_tableaux(&lam),
                    "shape {lam}"
                );
            }
        }
    }

    #[test]
    fn parse_accepts_exponent_shorthand() {
        assert_eq!("2^2,1^2".parse::<Partition>().unwrap(), p(&[2, 2, 1, 1]));
        assert_eq!("(3,1)".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("4, 2".parse::<Partition>().unwrap(), p(&[4, 2]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a,b".parse::<Partition>().is_err());
    }

    #[test]
    fn display_is_fully_expanded() {
        assert_eq!(p(&[2, 2, 1, 1]).to_string(), "2,2,1,1");
        assert_eq!(Partition::empty().to_string(), "");
    }

    #[test]
    fn new_strips_trailing_zeros_only() {
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap(), p(&[3, 1]));
        assert!(Partition::new(vec![3, 0, 1]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn serde_round_trip_is_plain_array() {
        let lam = p(&[2, 2, 1, 1]);
        let json = serde_json::to_string(&lam).unwrap();
        assert_eq!(json, "[2,2,1,1]");
        let back: Partition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, lam);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn multipartition_shape_has_explicit_zeros() {
        let mp = Multipartition::new(vec![p(&[2, 1]), Partition::empty(), p(&[1])]);
        assert_eq!(mp.shape(), vec![3, 0, 1]);
        assert_eq!(mp.total(), 4);
    }

    proptest! {
        #[test]
        fn parse_round_trips_display(parts in proptest::collection::vec(1usize..9, 0..7)) {
            let mut sorted = parts.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let lam = Partition::new(sorted).unwrap();
            let round: Partition = lam.to_string().parse().unwrap();
            prop_assert_eq!(round, lam);
        }

        #[test]
        fn conjugate_preserves_size(parts in proptest::collection::vec(1usize..9, 0..7)) {
            let mut sorted = parts.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let lam = Partition::new(sorted).unwrap();
            prop_assert_eq!(lam.conjugate().n(), lam.n());
        }
    }
}
