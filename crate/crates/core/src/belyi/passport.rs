use std::fmt;

use serde::Serialize;

/// A partition stored with parts in non-increasing order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// From `(part, multiplicity)` pairs, e.g. `[(5, 12), (6, 2)]`.
    pub fn from_counts(counts: &[(u32, u32)]) -> Self {
        Self::new(counts.iter().flat_map(|&(p, c)| std::iter::repeat_n(p, c as usize)).collect())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn counts(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

/// Exponent notation, largest part first: `5^12 1^2`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.counts().into_iter().map(|(p, c)| format!("{p}^{c}")).collect();
        write!(f, "{}", s.join(" "))
    }
}

/// Ramification data over `0`, `1` and `∞`: degrees of black vertices, white
/// vertices and faces of the dessin.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Passport {
    pub black: Partition,
    pub white: Partition,
    pub faces: Partition,
}

impl Passport {
    /// `None` unless the three partitions have the same sum.
    pub fn new(black: Partition, white: Partition, faces: Partition) -> Option<Self> {
        (black.sum() == white.sum() && white.sum() == faces.sum()).then_some(Passport { black, white, faces })
    }

    /// The common sum of the partitions, i.e. the degree of the map.
    pub fn degree(&self) -> u64 {
        self.black.sum()
    }
}

impl fmt::Display for Passport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {} | {})", self.black, self.white, self.faces)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_groups_parts() {
        let p = Partition::new(vec![1, 5, 1, 5]);
        assert_eq!(p.to_string(), "5^2 1^2");
        assert_eq!(p.sum(), 12);
    }

    #[test]
    fn unequal_sums_rejected() {
        let a = Partition::from_counts(&[(3, 2)]);
        let b = Partition::from_counts(&[(2, 2)]);
        assert!(Passport::new(a.clone(), b, a).is_none());
    }
}
