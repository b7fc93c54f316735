//! Splitting types of p in a degree-n field.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Multiset of (e, f) pairs, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SplittingType {
    factors: Vec<(u32, u32)>,
}

impl SplittingType {
    pub fn new(mut factors: Vec<(u32, u32)>) -> Self {
        factors.sort();
        SplittingType { factors }
    }

    pub fn factors(&self) -> &[(u32, u32)] {
        &self.factors
    }

    pub fn push(&mut self, e: u32, f: u32) {
        self.factors.push((e, f));
        self.factors.sort();
    }

    pub fn extend(&mut self, other: &SplittingType) {
        self.factors.extend_from_slice(&other.factors);
        self.factors.sort();
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Sum of e*f.
    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(e, f)| e * f).sum()
    }

    /// Number of primes of residue degree `f`.
    pub fn count_with_residue_degree(&self, f: u32) -> usize {
        self.factors.iter().filter(|&&(_, g)| g == f).count()
    }

    /// Sorted residue degrees.
    pub fn residue_profile(&self) -> Vec<u32> {
        let mut fs: Vec<u32> = self.factors.iter().map(|&(_, f)| f).collect();
        fs.sort();
        fs
    }

    pub fn is_tame(&self, p: u64) -> bool {
        self.factors.iter().all(|&(e, _)| !(e as u64).is_multiple_of(p))
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (e, g)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({e},{g})")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_and_counted() {
        let t = SplittingType::new(vec![(3, 1), (1, 1), (3, 1)]);
        assert_eq!(t.to_string(), "{(1,1),(3,1),(3,1)}");
        assert_eq!(t.degree(), 7);
        assert_eq!(t.count_with_residue_degree(1), 3);
        assert!(!t.is_tame(3));
        assert!(t.is_tame(2));
        assert_eq!(serde_json::to_string(&t).unwrap(), "[[1,1],[3,1],[3,1]]");
    }
}
