//! Integer partitions, signed partitions and the restricted partition counts
//! that appear in the z-class formulas for types B/C and D.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::LabelError;

/// A partition of `n`, run-length encoded as `(part, multiplicity)` pairs with
/// strictly decreasing parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    runs: Vec<(u32, u32)>,
}

impl Partition {
    /// The empty partition of zero.
    pub fn empty() -> Self {
        Partition { runs: Vec::new() }
    }

    /// Builds a partition from parts given in any order. Zero parts are dropped.
    pub fn from_parts<I: IntoIterator<Item = u32>>(parts: I) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut runs: Vec<(u32, u32)> = Vec::new();
        for p in parts {
            match runs.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => runs.push((p, 1)),
            }
        }
        Partition { runs }
    }

    /// `(part, multiplicity)` pairs, parts strictly decreasing.
    pub fn runs(&self) -> &[(u32, u32)] {
        &self.runs
    }

    pub fn n(&self) -> u32 {
        self.runs.iter().map(|&(p, m)| p * m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Number of parts counted with multiplicity.
    pub fn len(&self) -> u32 {
        self.runs.iter().map(|&(_, m)| m).sum()
    }

    pub fn multiplicity(&self, part: u32) -> u32 {
        self.runs
            .iter()
            .find(|&&(p, _)| p == part)
            .map_or(0, |&(_, m)| m)
    }

    /// Parts expanded with multiplicity, in decreasing order.
    pub fn parts(&self) -> impl Iterator<Item = u32> + '_ {
        self.runs
            .iter()
            .flat_map(|&(p, m)| std::iter::repeat_n(p, m as usize))
    }

    /// Product of `floor(l/2) + 1` over odd parts of multiplicity `l` and
    /// `w + 1` over even parts of multiplicity `w`: the number of z-classes of
    /// the hyperoctahedral group lying over this partition.
    pub fn bc_weight(&self) -> BigUint {
        self.runs
            .iter()
            .fold(BigUint::one(), |acc, &(p, m)| {
                let factor = if p % 2 == 1 { m / 2 + 1 } else { m + 1 };
                acc * BigUint::from(factor)
            })
    }

    /// True if some odd part occurs with odd multiplicity.
    pub fn has_odd_part_with_odd_multiplicity(&self) -> bool {
        self.runs.iter().any(|&(p, m)| p % 2 == 1 && m % 2 == 1)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.runs.is_empty() {
            return f.write_str("()");
        }
        let mut first = true;
        for &(p, m) in self.runs.iter().rev() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{p}")?;
            if m > 1 {
                write!(f, "~{m}")?;
            }
        }
        Ok(())
    }
}

/// One part size of a signed partition together with how often it occurs
/// unbarred (`positive`) and barred (`negative`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPart {
    pub part: u32,
    pub positive: u32,
    pub negative: u32,
}

impl SignedPart {
    pub fn multiplicity(&self) -> u32 {
        self.positive + self.negative
    }
}

/// A partition whose parts each carry a sign. Indexes the conjugacy classes
/// of the hyperoctahedral group `C2 wr S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPartition {
    entries: Vec<SignedPart>,
}

impl SignedPartition {
    /// Builds a signed partition from `(part, barred)` pairs in any order.
    pub fn from_signed_parts<I: IntoIterator<Item = (u32, bool)>>(parts: I) -> Self {
        let mut entries: Vec<SignedPart> = Vec::new();
        for (part, barred) in parts {
            assert!(part > 0, "signed partition parts must be positive");
            let idx = match entries.iter().position(|e| e.part == part) {
                Some(i) => i,
                None => {
                    entries.push(SignedPart {
                        part,
                        positive: 0,
                        negative: 0,
                    });
                    entries.len() - 1
                }
            };
            if barred {
                entries[idx].negative += 1;
            } else {
                entries[idx].positive += 1;
            }
        }
        entries.sort_unstable_by_key(|e| std::cmp::Reverse(e.part));
        SignedPartition { entries }
    }

    /// Builds from entries; entries with zero total multiplicity are dropped
    /// and entries sharing a part are merged.
    pub fn from_entries<I: IntoIterator<Item = SignedPart>>(entries: I) -> Self {
        let mut merged: Vec<SignedPart> = Vec::new();
        for e in entries {
            if e.multiplicity() == 0 {
                continue;
            }
            match merged.iter_mut().find(|m| m.part == e.part) {
                Some(m) => {
                    m.positive += e.positive;
                    m.negative += e.negative;
                }
                None => merged.push(e),
            }
        }
        merged.sort_unstable_by_key(|e| std::cmp::Reverse(e.part));
        SignedPartition { entries: merged }
    }

    /// Entries with strictly decreasing parts.
    pub fn entries(&self) -> &[SignedPart] {
        &self.entries
    }

    pub fn n(&self) -> u32 {
        self.entries.iter().map(|e| e.part * e.multiplicity()).sum()
    }

    pub fn underlying(&self) -> Partition {
        Partition {
            runs: self
                .entries
                .iter()
                .map(|e| (e.part, e.multiplicity()))
                .collect(),
        }
    }

    /// Number of barred parts, counted with multiplicity.
    pub fn bar_count(&self) -> u32 {
        self.entries.iter().map(|e| e.negative).sum()
    }

    /// All parts even and unbarred: the classes that split in `D_n`.
    pub fn is_all_even_positive(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.part % 2 == 0 && e.negative == 0)
    }

    pub fn entry(&self, part: u32) -> Option<&SignedPart> {
        self.entries.iter().find(|e| e.part == part)
    }

    /// Every `(part, barred)` occurrence, ascending by part with unbarred
    /// copies first.
    pub fn signed_parts_ascending(&self) -> impl Iterator<Item = (u32, bool)> + '_ {
        self.entries.iter().rev().flat_map(|e| {
            std::iter::repeat_n((e.part, false), e.positive as usize)
                .chain(std::iter::repeat_n((e.part, true), e.negative as usize))
        })
    }
}

impl fmt::Display for SignedPartition {
    /// Ascending parts, unbarred before barred; `b` marks a bar and `~k` a
    /// multiplicity above one, e.g. `1~2 2b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut tokens = Vec::new();
        for e in self.entries.iter().rev() {
            for (count, bar) in [(e.positive, ""), (e.negative, "b")] {
                match count {
                    0 => {}
                    1 => tokens.push(format!("{}{}", e.part, bar)),
                    c => tokens.push(format!("{}{}~{}", e.part, bar, c)),
                }
            }
        }
        f.write_str(&tokens.join(" "))
    }
}

impl FromStr for SignedPartition {
    type Err = LabelError;

    /// Parses whitespace-separated tokens `<part>[b][~<mult>]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = Vec::new();
        for token in s.split_whitespace() {
            let (head, mult) = match token.split_once('~') {
                Some((h, m)) => {
                    let m: u32 = m
                        .parse()
                        .map_err(|_| LabelError::new(token, "bad multiplicity"))?;
                    if m == 0 {
                        return Err(LabelError::new(token, "multiplicity must be positive"));
                    }
                    (h, m)
                }
                None => (token, 1),
            };
            let (digits, barred) = match head.strip_suffix('b') {
                Some(d) => (d, true),
                None => (head, false),
            };
            let part: u32 = digits
                .parse()
                .map_err(|_| LabelError::new(token, "bad part"))?;
            if part == 0 {
                return Err(LabelError::new(token, "parts must be positive"));
            }
            parts.extend(std::iter::repeat_n((part, barred), mult as usize));
        }
        if parts.is_empty() {
            return Err(LabelError::new(s, "empty signed partition"));
        }
        Ok(SignedPartition::from_signed_parts(parts))
    }
}

/// Every partition of `n` in reverse-lexicographic order (`5, 4 1, 3 2, ...`).
/// `n = 0` yields the single empty partition.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_parts(current.iter().copied()));
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every signed partition of `n`, grouped by underlying partition. Underlying
/// partitions run from `1^n` up to `n`; within a group the barred counts
/// increase lexicographically from the smallest part, so `n = 2` gives
/// `1~2, 1 1b, 1b~2, 2, 2b`.
pub fn signed_partitions_of(n: u32) -> Vec<SignedPartition> {
    let mut out = Vec::new();
    for lambda in partitions_of(n).into_iter().rev() {
        // ascending parts, most significant digit first
        let runs: Vec<(u32, u32)> = lambda.runs().iter().rev().copied().collect();
        let mut negatives = vec![0u32; runs.len()];
        'odometer: loop {
            out.push(SignedPartition::from_entries(runs.iter().zip(&negatives).map(
                |(&(part, mult), &neg)| SignedPart {
                    part,
                    positive: mult - neg,
                    negative: neg,
                },
            )));
            for i in (0..runs.len()).rev() {
                if negatives[i] < runs[i].1 {
                    negatives[i] += 1;
                    continue 'odometer;
                }
                negatives[i] = 0;
            }
            break;
        }
    }
    out
}

/// Number of partitions of `n` whose parts are all even and at least 4.
/// `zeta(0) = 1` (the empty partition).
pub fn zeta(n: u32) -> BigUint {
    let n = n as usize;
    let mut ways = vec![BigUint::zero(); n + 1];
    ways[0] = BigUint::one();
    for part in (4..=n).step_by(2) {
        for total in part..=n {
            let add = ways[total - part].clone();
            ways[total] += add;
        }
    }
    ways.swap_remove(n)
}

/// Partitions of `n` with at least one odd part of odd multiplicity.
pub fn delta_set(n: u32) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(Partition::has_odd_part_with_odd_multiplicity)
        .collect()
}

/// Partitions of `n` in which every odd part has even multiplicity; the
/// complement of [`delta_set`].
pub fn delta_prime_set(n: u32) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| !p.has_odd_part_with_odd_multiplicity())
        .collect()
}

/// Count of tuples `(t_1..t_p)` with `0 <= t_i < d_i` and even sum, which is
/// `ceil(prod d_i / 2)`.
///
/// Panics if `d` is empty or contains a zero.
pub fn even_sum_tuple_count(d: &[u64]) -> BigUint {
    assert!(!d.is_empty(), "even_sum_tuple_count needs at least one bound");
    assert!(d.iter().all(|&x| x >= 1), "bounds must be positive");
    let product = d
        .iter()
        .fold(BigUint::one(), |acc, &x| acc * BigUint::from(x));
    (product + 1u32) / 2u32
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::from_parts(parts.iter().copied())
    }

    #[test]
    fn partitions_small() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(2), vec![p(&[2]), p(&[1, 1])]);
        let five: Vec<String> = partitions_of(5).iter().map(|x| x.to_string()).collect();
        assert_eq!(
            five,
            ["5", "1 4", "2 3", "1~2 3", "1 2~2", "1~3 2", "1~5"]
        );
    }

    #[test]
    fn signed_partitions_of_two_follow_listing() {
        let got: Vec<String> = signed_partitions_of(2)
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(got, ["1~2", "1 1b", "1b~2", "2", "2b"]);
        assert_eq!(signed_partitions_of(1).len(), 2);
        assert_eq!(signed_partitions_of(3).len(), 10);
    }

    #[test]
    fn zeta_values() {
        assert_eq!(zeta(0), BigUint::from(1u32));
        assert_eq!(zeta(2), BigUint::zero());
        assert_eq!(zeta(8), BigUint::from(2u32));
        // 12, 8 4, 6 6, 4 4 4
        assert_eq!(zeta(12), BigUint::from(4u32));
        assert_eq!(zeta(7), BigUint::zero());
    }

    #[test]
    fn delta_examples() {
        assert!(delta_set(2).is_empty());
        assert_eq!(delta_set(4), vec![p(&[3, 1])]);
        assert_eq!(delta_set(5).len(), 7);
        assert_eq!(delta_prime_set(2), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(
            delta_prime_set(4),
            vec![p(&[4]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert!(delta_prime_set(3).is_empty());
    }

    #[test]
    fn even_sum_examples() {
        assert_eq!(even_sum_tuple_count(&[2]), BigUint::from(1u32));
        assert_eq!(even_sum_tuple_count(&[3]), BigUint::from(2u32));
        assert_eq!(even_sum_tuple_count(&[3, 3]), BigUint::from(5u32));
    }

    #[test]
    #[should_panic]
    fn even_sum_rejects_empty() {
        even_sum_tuple_count(&[]);
    }

    #[test]
    fn signed_label_round_trip() {
        let sp: SignedPartition = "1~2 2b".parse().unwrap();
        assert_eq!(sp.n(), 4);
        assert_eq!(sp.bar_count(), 1);
        assert_eq!(sp.to_string(), "1~2 2b");
        let same: SignedPartition = "2b~1 1 1".parse().unwrap();
        assert_eq!(same, sp);
        assert!("0".parse::<SignedPartition>().is_err());
        assert!("3x".parse::<SignedPartition>().is_err());
        assert!("".parse::<SignedPartition>().is_err());
    }

    #[test]
    fn bc_weight_matches_definition() {
        // 1^3 2^2: (floor(3/2)+1) * (2+1)
        assert_eq!(p(&[2, 2, 1, 1, 1]).bc_weight(), BigUint::from(6u32));
    }
}
