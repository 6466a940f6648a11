//! Permutations of `{0, .., n-1}` with cached Coxeter length (inversion
//! count), reduced words, and longest elements of Young subgroups.
//!
//! Generator `s` (for `0 <= s < n-1`) is the adjacent transposition of
//! positions `s` and `s+1`; right multiplication `w * s` swaps the images at
//! those positions and changes the length by exactly one.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("images {0:?} are not a bijection on 0..{1}")]
    NotABijection(Vec<usize>, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<usize>,
    length: usize,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect(), length: 0 }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(PermError::NotABijection(images, n));
            }
            seen[x] = true;
        }
        let length = inversions(&images);
        Ok(Self { images, length })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    /// Coxeter length = number of inversions; cached at construction.
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// True iff right multiplication by generator `s` shortens the word,
    /// i.e. `images[s] > images[s+1]`.
    pub fn has_right_descent(&self, s: usize) -> bool {
        self.images[s] > self.images[s + 1]
    }

    /// `self * s`: swaps the images at positions `s` and `s+1`.
    pub fn times_gen(&self, s: usize) -> Perm {
        let mut images = self.images.clone();
        let delta = if self.has_right_descent(s) { -1i64 } else { 1 };
        images.swap(s, s + 1);
        Perm { images, length: (self.length as i64 + delta) as usize }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0usize; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Perm { images, length: self.length }
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        // (self * other)(i) = self(other(i)) under right-action conventions
        // this is "apply self first": position i goes through other then self.
        assert_eq!(self.n(), other.n());
        let images: Vec<usize> = (0..self.n()).map(|i| self.images[other.images[i]]).collect();
        let length = inversions(&images);
        Perm { images, length }
    }

    /// A reduced word `s_{a_1} ... s_{a_k}` with product `self`, obtained by
    /// repeatedly stripping the smallest right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut current = self.clone();
        let mut word = Vec::with_capacity(self.length);
        while !current.is_identity() {
            let s = (0..current.n() - 1)
                .find(|&s| current.has_right_descent(s))
                .expect("non-identity permutation has a descent");
            current = current.times_gen(s);
            word.push(s);
        }
        word.reverse();
        word
    }

    /// Longest element of the Young subgroup `W_λ`: reverses each λ-block of
    /// consecutive positions. Its length is `Σ λ_i (λ_i - 1) / 2`.
    pub fn longest_in_young_subgroup(lambda: &Partition) -> Perm {
        let n = lambda.n();
        let mut images = Vec::with_capacity(n);
        let mut offset = 0;
        for &part in lambda.parts() {
            images.extend((offset..offset + part).rev());
            offset += part;
        }
        let length = lambda.parts().iter().map(|&p| p * (p - 1) / 2).sum();
        debug_assert_eq!(length, inversions(&images));
        Perm { images, length }
    }
}

fn inversions(images: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            if images[i] > images[j] {
                count += 1;
            }
        }
    }
    count
}

impl Ord for Perm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.images.cmp(&other.images)
    }
}

impl PartialOrd for Perm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Perm {
    /// One-line notation with 1-based entries, e.g. `[2 1 4 3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self.images.iter().map(|&x| (x + 1).to_string()).collect();
        write!(f, "[{}]", entries.join(" "))
    }
}

/// All permutations of `S_n` in lexicographic order of image vectors.
pub fn all_permutations(n: usize) -> Vec<Perm> {
    fn rec(n: usize, prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        if prefix.len() == n {
            out.push(Perm::from_images(prefix.clone()).expect("valid by construction"));
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                rec(n, prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}
