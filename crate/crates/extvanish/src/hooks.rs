//! Hook graphs and the column-constancy irreducibility test for two-row
//! Specht parameters.
//!
//! Cell `(i, j)` of the hook graph (1-based in the formula) carries
//! `h_ij = λ_i + λ'_j + 1 - i - j`; storage is 0-based, so
//! `rows[i][j] = λ[i] + λ'[j] - i - j - 1`.

use std::fmt;

use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JamesError {
    #[error("criterion applies to two-part partitions only, got {0} nonzero parts")]
    NotTwoPart(usize),
}

/// The ragged matrix of hook lengths of a Young diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookGraph {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl HookGraph {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Product of all hook lengths; divides `n!`.
    pub fn hook_product(&self) -> u128 {
        self.rows
            .iter()
            .flat_map(|row| row.iter())
            .map(|&h| h as u128)
            .product()
    }
}

impl fmt::Display for HookGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|h| h.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// One cell of a divisibility array: `Infinity` when `l` does not divide the
/// hook length, otherwise the `r`-adic valuation of the hook length.
///
/// The two branches are distinct: a hook length divisible by `l` but not by
/// `r` yields `Valuation(0)`, not `Infinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JamesSymbol {
    Infinity,
    Valuation(u32),
}

impl fmt::Display for JamesSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JamesSymbol::Infinity => write!(f, "inf"),
            JamesSymbol::Valuation(m) => write!(f, "{m}"),
        }
    }
}

/// The symbol array `[λ]_{r,l}` obtained from the hook graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JamesArray {
    shape: Partition,
    rows: Vec<Vec<JamesSymbol>>,
    r: u64,
    l: u64,
}

impl JamesArray {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<JamesSymbol>] {
        &self.rows
    }

    pub fn params(&self) -> (u64, u64) {
        (self.r, self.l)
    }

    /// True iff within every column all present cells carry the same symbol.
    pub fn columns_constant(&self) -> bool {
        let width = self.rows.first().map_or(0, |row| row.len());
        for j in 0..width {
            let mut column = self.rows.iter().filter_map(|row| row.get(j));
            if let Some(first) = column.next() {
                if column.any(|cell| cell != first) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for JamesArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|s| s.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Hook lengths of every cell of the diagram of `lambda`.
pub fn hook_graph(lambda: &Partition) -> HookGraph {
    let conj = lambda.conjugate();
    let rows = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| {
            (0..len)
                .map(|j| len + conj.parts()[j] - i - j - 1)
                .collect()
        })
        .collect();
    HookGraph { shape: lambda.clone(), rows }
}

/// Replaces each hook length `h` by `Infinity` when `l ∤ h`, and otherwise by
/// the largest `m` with `r^m | h`.
pub fn james_array(lambda: &Partition, r: u64, l: u64) -> JamesArray {
    debug_assert!(r >= 2 && l >= 2);
    let graph = hook_graph(lambda);
    let rows = graph
        .rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|&h| {
                    if (h as u64) % l != 0 {
                        JamesSymbol::Infinity
                    } else {
                        let mut m = 0u32;
                        let mut h = h as u64;
                        while h % r == 0 {
                            m += 1;
                            h /= r;
                        }
                        JamesSymbol::Valuation(m)
                    }
                })
                .collect()
        })
        .collect();
    JamesArray { shape: lambda.clone(), rows, r, l }
}

/// Column-constancy verdict for a partition with exactly two nonzero parts:
/// true iff every column of `[λ]_{r,l}` is constant. Other shapes are
/// rejected; the one-row case in particular is handled upstream, not here.
pub fn james_irreducible(lambda: &Partition, r: u64, l: u64) -> Result<bool, JamesError> {
    if lambda.num_parts() != 2 {
        return Err(JamesError::NotTwoPart(lambda.num_parts()));
    }
    Ok(james_array(lambda, r, l).columns_constant())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    const INF: JamesSymbol = JamesSymbol::Infinity;
    const V0: JamesSymbol = JamesSymbol::Valuation(0);

    #[test]
    fn hook_graph_examples() {
        assert_eq!(hook_graph(&p(&[3, 3])).rows(), &[vec![4, 3, 2], vec![3, 2, 1]]);
        assert_eq!(hook_graph(&p(&[3, 1])).rows(), &[vec![4, 2, 1], vec![1]]);
        assert_eq!(hook_graph(&p(&[2, 2])).rows(), &[vec![3, 2], vec![2, 1]]);
    }

    #[test]
    fn james_array_examples() {
        assert_eq!(
            james_array(&p(&[3, 3]), 13, 3).rows(),
            &[vec![INF, V0, INF], vec![V0, INF, INF]]
        );
        assert_eq!(
            james_array(&p(&[2, 2]), 5, 4).rows(),
            &[vec![INF, INF], vec![INF, INF]]
        );
        assert_eq!(
            james_array(&p(&[3, 1]), 5, 4).rows(),
            &[vec![V0, INF, INF], vec![INF]]
        );
    }

    #[test]
    fn valuation_counts_powers_of_r() {
        // Hook length 4 at l = 2, r = 2 has 2-adic valuation 2.
        let arr = james_array(&p(&[2, 2]), 2, 2);
        assert_eq!(
            arr.rows(),
            &[
                vec![JamesSymbol::Infinity, JamesSymbol::Valuation(1)],
                vec![JamesSymbol::Valuation(1), JamesSymbol::Infinity]
            ]
        );
        let arr = james_array(&p(&[3, 1]), 2, 2);
        assert_eq!(arr.rows()[0][0], JamesSymbol::Valuation(2)); // hook 4
    }

    #[test]
    fn verdict_examples() {
        assert!(!james_irreducible(&p(&[3, 3]), 13, 3).unwrap());
        assert!(james_irreducible(&p(&[2, 2]), 5, 4).unwrap());
        assert!(james_irreducible(&p(&[4, 2]), 13, 3).unwrap());
        assert!(!james_irreducible(&p(&[5, 1]), 13, 3).unwrap());
    }

    #[test]
    fn five_one_fails_on_first_column() {
        let arr = james_array(&p(&[5, 1]), 13, 3);
        assert_eq!(arr.rows()[0][0], V0); // hook 6
        assert_eq!(arr.rows()[1][0], INF); // hook 1
        assert!(!arr.columns_constant());
    }

    #[test]
    fn verdict_rejects_other_shapes() {
        assert_eq!(
            james_irreducible(&p(&[4]), 13, 3),
            Err(JamesError::NotTwoPart(1))
        );
        assert_eq!(
            james_irreducible(&p(&[2, 1, 1]), 13, 3),
            Err(JamesError::NotTwoPart(3))
        );
    }

    #[test]
    fn hook_product_divides_factorial() {
        for n in 1..=7usize {
            let factorial: u128 = (1..=n as u128).product();
            for lam in enumerate_partitions(n) {
                let product = hook_graph(&lam).hook_product();
                assert_eq!(factorial % product, 0, "shape {lam}");
                assert_eq!(
                    (factorial / product) as u64,
                    lam.standard_tableau_count(),
                    "shape {lam}"
                );
            }
        }
    }

    #[test]
    fn large_l_gives_all_infinity_and_irreducible() {
        for n in 2..=6usize {
            for lam in enumerate_partitions(n) {
                let arr = james_array(&lam, 11, (n + 1) as u64);
                assert!(arr
                    .rows()
                    .iter()
                    .all(|row| row.iter().all(|&s| s == JamesSymbol::Infinity)));
                if lam.num_parts() == 2 {
                    assert!(james_irreducible(&lam, 11, (n + 1) as u64).unwrap());
                }
            }
        }
    }

    #[test]
    fn hook_shape_matches_diagram() {
        let lam = p(&[4, 2, 1]);
        let graph = hook_graph(&lam);
        let lens: Vec<usize> = graph.rows().iter().map(|row| row.len()).collect();
        assert_eq!(lens, vec![4, 2, 1]);
        assert!(graph.rows().iter().flatten().all(|&h| h >= 1));
    }

    #[test]
    fn two_row_verdict_depends_only_on_shared_columns() {
        // (k,1): the only column with two cells is the first; its top cell is
        // the hook k+1 and its bottom cell is always 1 (symbol inf).
        for k in 1..=12usize {
            let lam = p(&[k, 1]);
            let expected = (k as u64 + 1) % 3 != 0;
            assert_eq!(james_irreducible(&lam, 13, 3).unwrap(), expected, "k={k}");
        }
    }

    #[test]
    fn symbols_render_infinity_as_inf() {
        assert_eq!(JamesSymbol::Infinity.to_string(), "inf");
        assert_eq!(JamesSymbol::Valuation(2).to_string(), "2");
        let rendered = james_array(&p(&[3, 1]), 5, 4).to_string();
        assert_eq!(rendered, "0 inf inf\ninf\n");
    }
}
