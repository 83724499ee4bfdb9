//! The hyperoctahedral group `C2 wr S_n` as signed permutations, its index-2
//! subgroup `D_n`, and the z-class structure of both read off signed
//! partitions.
//!
//! An element `[a_1, ..., a_n; s]` sends the basis vector `e_j` to
//! `a_{s(j)} e_{s(j)}`. Products follow
//! `[a; s][b; p] = [a_i b_{s^-1(i)}; s p]` where `s p` applies `p` first.

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::combinatorics::{signed_partitions_of, Partition, SignedPart, SignedPartition};
use crate::error::{Error, LabelError, Result};

/// Element of `C2 wr S_n`: a sign vector and a permutation, both 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    signs: Vec<i8>,
    perm: Vec<u32>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            signs: vec![1; n],
            perm: (0..n as u32).collect(),
        }
    }

    /// `perm[i]` is the image of `i` (0-based); every sign must be `+1` or `-1`.
    pub fn new(signs: Vec<i8>, perm: Vec<u32>) -> Result<Self> {
        if signs.len() != perm.len() {
            return Err(Error::DimensionMismatch {
                left: signs.len(),
                right: perm.len(),
            });
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidArgument("signs must be +1 or -1".into()));
        }
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            let p = p as usize;
            if p >= perm.len() || seen[p] {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
            seen[p] = true;
        }
        Ok(SignedPermutation { signs, perm })
    }

    /// Builds from signs and 1-based disjoint cycles, e.g. `[[1, 4, 5], [2, 6]]`.
    pub fn from_cycles(signs: Vec<i8>, cycles: &[&[u32]]) -> Result<Self> {
        let n = signs.len();
        let mut perm: Vec<u32> = (0..n as u32).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                if x == 0 || x as usize > n || next == 0 || next as usize > n {
                    return Err(Error::InvalidArgument("cycle entry out of range".into()));
                }
                if touched[x as usize - 1] {
                    return Err(Error::InvalidArgument("cycles are not disjoint".into()));
                }
                touched[x as usize - 1] = true;
                perm[x as usize - 1] = next - 1;
            }
        }
        SignedPermutation::new(signs, perm)
    }

    pub fn n(&self) -> usize {
        self.signs.len()
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn perm(&self) -> &[u32] {
        &self.perm
    }

    /// Product `self * other` by the wreath rule.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let n = self.n();
        let mut inv = vec![0usize; n];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p as usize] = i;
        }
        let signs = (0..n).map(|i| self.signs[i] * other.signs[inv[i]]).collect();
        let perm = other.perm.iter().map(|&p| self.perm[p as usize]).collect();
        Ok(SignedPermutation { signs, perm })
    }

    /// `[a_{s(i)}; s^-1]`.
    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut perm = vec![0u32; n];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p as usize] = i as u32;
        }
        let signs = (0..n).map(|i| self.signs[self.perm[i] as usize]).collect();
        SignedPermutation { signs, perm }
    }

    /// `self * x * self^-1`.
    pub fn conjugate(&self, x: &Self) -> Result<Self> {
        self.multiply(x)?.multiply(&self.inverse())
    }

    /// Membership in `D_n`: the product of all signs is `+1`.
    pub fn in_d_n(&self) -> bool {
        self.signs.iter().filter(|&&s| s < 0).count() % 2 == 0
    }

    /// Cycles of the permutation part, each starting at its smallest point,
    /// ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.perm[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Signed cycle type: a cycle contributes a barred part exactly when the
    /// product of the signs on its points is `-1`.
    pub fn signed_cycle_type(&self) -> SignedPartition {
        SignedPartition::from_signed_parts(self.cycles().into_iter().map(|c| {
            let product: i8 = c.iter().map(|&i| self.signs[i as usize]).product();
            (c.len() as u32, product < 0)
        }))
    }

    /// Faithful action on the `2n` points `±e_i`, encoded as point `2i` for
    /// `+e_i` and `2i + 1` for `-e_i`. Composition of encodings matches
    /// [`SignedPermutation::multiply`].
    pub fn to_points(&self) -> Vec<u8> {
        let n = self.n();
        assert!(2 * n <= 256, "point encoding supports n <= 128");
        let mut out = vec![0u8; 2 * n];
        for j in 0..n {
            let target = self.perm[j] as usize;
            let negative = self.signs[target] < 0;
            out[2 * j] = (2 * target + negative as usize) as u8;
            out[2 * j + 1] = (2 * target + !negative as usize) as u8;
        }
        out
    }

    /// Inverse of [`SignedPermutation::to_points`]; `None` if the point map
    /// does not come from a signed permutation.
    pub fn from_points(points: &[u8]) -> Option<Self> {
        if !points.len().is_multiple_of(2) {
            return None;
        }
        let n = points.len() / 2;
        let mut signs = vec![1i8; n];
        let mut perm = vec![0u32; n];
        for j in 0..n {
            let p = points[2 * j] as usize;
            let q = points[2 * j + 1] as usize;
            if p / 2 != q / 2 || p == q || p / 2 >= n {
                return None;
            }
            perm[j] = (p / 2) as u32;
            signs[p / 2] = if p % 2 == 1 { -1 } else { 1 };
        }
        SignedPermutation::new(signs, perm).ok()
    }
}

impl Mul for &SignedPermutation {
    type Output = SignedPermutation;

    fn mul(self, rhs: &SignedPermutation) -> SignedPermutation {
        self.multiply(rhs).expect("signed permutations of equal size")
    }
}

impl fmt::Display for SignedPermutation {
    /// `[+1,-1;(1 2)]` with 1-based cycles; fixed points are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let signs: Vec<&str> = self
            .signs
            .iter()
            .map(|&s| if s > 0 { "+1" } else { "-1" })
            .collect();
        let cycles: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
                format!("({})", pts.join(" "))
            })
            .collect();
        let perm = if cycles.is_empty() {
            "id".to_string()
        } else {
            cycles.concat()
        };
        write!(f, "[{};{}]", signs.join(","), perm)
    }
}

/// Canonical representative of the class with signed cycle type `sp`.
///
/// Cycles are laid out on consecutive points, ascending by part and barred
/// copies before unbarred ones. Unbarred cycles carry all-plus signs, barred
/// odd cycles all-minus signs, and barred even cycles the pattern
/// `-1, +1, ..., +1`.
pub fn class_representative(sp: &SignedPartition) -> SignedPermutation {
    let n = sp.n() as usize;
    let mut signs = vec![1i8; n];
    let mut perm: Vec<u32> = (0..n as u32).collect();
    let mut offset = 0usize;
    for entry in sp.entries().iter().rev() {
        let k = entry.part as usize;
        for copy in 0..entry.multiplicity() {
            let barred = copy < entry.negative;
            for i in 0..k {
                perm[offset + i] = (offset + (i + 1) % k) as u32;
            }
            if barred {
                if k % 2 == 1 {
                    signs[offset..offset + k].fill(-1);
                } else {
                    signs[offset] = -1;
                }
            }
            offset += k;
        }
    }
    SignedPermutation { signs, perm }
}

fn factorial(m: u32) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// Order of the centralizer in `C2 wr S_n` of an element of type `sp`:
/// the product over parts `k` of `(2k)^p p! (2k)^q q!`, with `p`/`q` the
/// unbarred/barred multiplicities.
pub fn centralizer_order_bc(sp: &SignedPartition) -> BigUint {
    sp.entries().iter().fold(BigUint::one(), |acc, e| {
        let base = BigUint::from(2 * e.part);
        acc * base.pow(e.positive)
            * factorial(e.positive)
            * BigUint::from(2 * e.part).pow(e.negative)
            * factorial(e.negative)
    })
}

/// `|C2 wr S_n| = 2^n n!`.
pub fn order_bc(n: u32) -> BigUint {
    BigUint::from(2u32).pow(n) * factorial(n)
}

/// Key identifying the z-class of a signed partition in `C2 wr S_n`: the
/// underlying partition, the unordered sign split of each odd part and the
/// ordered sign split of each even part.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct BcKey(Vec<(u32, u32, u32)>);

fn bc_key(sp: &SignedPartition) -> BcKey {
    BcKey(
        sp.entries()
            .iter()
            .map(|e| {
                if e.part % 2 == 1 {
                    (e.part, e.positive.min(e.negative), e.positive.max(e.negative))
                } else {
                    (e.part, e.positive, e.negative)
                }
            })
            .collect(),
    )
}

fn group_by_key<T: Clone, K: std::hash::Hash + Eq>(
    items: impl IntoIterator<Item = T>,
    key: impl Fn(&T) -> K,
) -> Vec<Vec<T>> {
    let mut slot: HashMap<K, usize> = HashMap::new();
    let mut groups: Vec<Vec<T>> = Vec::new();
    for item in items {
        let k = key(&item);
        let idx = *slot.entry(k).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[idx].push(item);
    }
    groups
}

/// z-classes of `C2 wr S_n` as groups of signed partitions. Odd parts may
/// swap their barred and unbarred multiplicities freely; even parts must
/// match exactly. Groups appear in the order of [`signed_partitions_of`].
pub fn z_classes_bc(n: u32) -> Vec<Vec<SignedPartition>> {
    group_by_key(signed_partitions_of(n), bc_key)
}

/// Which of the two `D_n`-classes a split class refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SplitHalf {
    /// The half containing the all-plus-signs representative.
    Plus,
    /// Its conjugate by `diag(-1, 1, ..., 1)`.
    Minus,
}

/// A conjugacy class of `D_n`: a signed partition with an even number of
/// barred parts, plus the half for classes that split.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedClassLabel {
    pub signed_partition: SignedPartition,
    pub split_half: Option<SplitHalf>,
}

impl SignedClassLabel {
    pub fn unsplit(sp: SignedPartition) -> Self {
        SignedClassLabel {
            signed_partition: sp,
            split_half: None,
        }
    }

    /// A representative of this `D_n` class.
    pub fn representative(&self) -> SignedPermutation {
        let rep = class_representative(&self.signed_partition);
        match self.split_half {
            Some(SplitHalf::Minus) => {
                let mut flip = SignedPermutation::identity(rep.n());
                flip.signs[0] = -1;
                flip.conjugate(&rep).expect("same size")
            }
            _ => rep,
        }
    }
}

impl fmt::Display for SignedClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signed_partition)?;
        match self.split_half {
            Some(SplitHalf::Plus) => f.write_str("+"),
            Some(SplitHalf::Minus) => f.write_str("-"),
            None => Ok(()),
        }
    }
}

impl FromStr for SignedClassLabel {
    type Err = LabelError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        let (body, half) = if let Some(b) = s.strip_suffix('+') {
            (b, Some(SplitHalf::Plus))
        } else if let Some(b) = s.strip_suffix('-') {
            (b, Some(SplitHalf::Minus))
        } else {
            (s, None)
        };
        let sp: SignedPartition = body.parse()?;
        if half.is_some() && !sp.is_all_even_positive() {
            return Err(LabelError::new(s, "only all-even unbarred classes split"));
        }
        Ok(SignedClassLabel {
            signed_partition: sp,
            split_half: half,
        })
    }
}

/// The `D_n` label of an element of `D_n`.
///
/// For split types the element is first conjugated to all-plus signs by a
/// diagonal matrix `h`; it lies in the plus half exactly when `h` is in `D_n`.
pub fn dn_label_of(x: &SignedPermutation) -> Option<SignedClassLabel> {
    if !x.in_d_n() {
        return None;
    }
    let sp = x.signed_cycle_type();
    if !sp.is_all_even_positive() {
        return Some(SignedClassLabel::unsplit(sp));
    }
    // h_{s(j)} = a_{s(j)} h_j along each cycle, starting from h = +1.
    let mut negative = 0usize;
    for cycle in x.cycles() {
        let mut h = 1i8;
        for &j in &cycle[1..] {
            h *= x.signs[j as usize];
            if h < 0 {
                negative += 1;
            }
        }
    }
    let half = if negative.is_multiple_of(2) {
        SplitHalf::Plus
    } else {
        SplitHalf::Minus
    };
    Some(SignedClassLabel {
        signed_partition: sp,
        split_half: Some(half),
    })
}

/// Conjugacy classes of `D_n`: signed partitions with an even number of
/// barred parts, split types listed twice (plus then minus).
pub fn dn_conjugacy_classes(n: u32) -> Vec<SignedClassLabel> {
    let mut out = Vec::new();
    for sp in signed_partitions_of(n) {
        if sp.bar_count() % 2 != 0 {
            continue;
        }
        if sp.is_all_even_positive() {
            out.push(SignedClassLabel {
                signed_partition: sp.clone(),
                split_half: Some(SplitHalf::Plus),
            });
            out.push(SignedClassLabel {
                signed_partition: sp,
                split_half: Some(SplitHalf::Minus),
            });
        } else {
            out.push(SignedClassLabel::unsplit(sp));
        }
    }
    out
}

/// The two halves of a split class are z-conjugate exactly when some part
/// congruent to 2 mod 4 has odd multiplicity.
pub fn split_halves_merge(sp: &SignedPartition) -> bool {
    sp.entries()
        .iter()
        .any(|e| e.part % 4 == 2 && e.multiplicity() % 2 == 1)
}

/// If `sp` is `1^2 M` or `1b^2 M` with `M` made of unbarred even parts all at
/// least 4, returns the split type `2 M` whose classes share its z-class.
fn merged_split_partner(sp: &SignedPartition) -> Option<SignedPartition> {
    let ones = sp.entry(1)?;
    if ones.multiplicity() != 2 || ones.positive == 1 {
        return None;
    }
    let rest: Vec<SignedPart> = sp.entries().iter().filter(|e| e.part != 1).copied().collect();
    if !rest
        .iter()
        .all(|e| e.part % 2 == 0 && e.part >= 4 && e.negative == 0)
    {
        return None;
    }
    Some(SignedPartition::from_entries(rest.into_iter().chain([SignedPart {
        part: 2,
        positive: 1,
        negative: 0,
    }])))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum DnKey {
    Class(BcKey),
    SplitHalf(BcKey, SplitHalf),
}

/// z-classes of `D_n` as groups of class labels.
///
/// * Non-split classes group as they do in `C2 wr S_n`.
/// * The halves of a split class share a z-class iff [`split_halves_merge`].
/// * The classes `1^2 M`, `1b^2 M` and both halves of `2 M`, with `M`
///   unbarred even parts all at least 4, form one z-class.
pub fn z_classes_dn(n: u32) -> Vec<Vec<SignedClassLabel>> {
    let key = |label: &SignedClassLabel| {
        let sp = &label.signed_partition;
        if let Some(partner) = merged_split_partner(sp) {
            return DnKey::Class(bc_key(&partner));
        }
        match label.split_half {
            Some(half) if !split_halves_merge(sp) => DnKey::SplitHalf(bc_key(sp), half),
            _ => DnKey::Class(bc_key(sp)),
        }
    };
    group_by_key(dn_conjugacy_classes(n), key)
}

/// Underlying cycle type of a plain permutation given as an image array.
pub fn cycle_type(perm: &[u8]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x] as usize;
            len += 1;
        }
        parts.push(len);
    }
    Partition::from_parts(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SignedPartition {
        s.parse().unwrap()
    }

    fn sperm(signs: &[i8], cycles: &[&[u32]]) -> SignedPermutation {
        SignedPermutation::from_cycles(signs.to_vec(), cycles).unwrap()
    }

    #[test]
    fn multiply_examples() {
        let swap = sperm(&[1, 1], &[&[1, 2]]);
        assert_eq!(&swap * &swap, SignedPermutation::identity(2));
        let x = sperm(&[1, -1], &[&[1, 2]]);
        assert_eq!(&x * &x, sperm(&[-1, -1], &[]));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = SignedPermutation::identity(2);
        let b = SignedPermutation::identity(3);
        assert!(matches!(
            a.multiply(&b),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn cycle_type_examples() {
        let x = sperm(&[1, -1, -1, 1, 1, -1], &[&[1, 4, 5], &[2, 6]]);
        assert_eq!(x.signed_cycle_type(), sp("1b 2 3"));
        assert_eq!(SignedPermutation::identity(3).signed_cycle_type(), sp("1~3"));
        for n in 1..=6u32 {
            let cycle: Vec<u32> = (1..=n).collect();
            let y = sperm(&vec![-1; n as usize], &[&cycle]);
            let expected = if n % 2 == 0 { n.to_string() } else { format!("{n}b") };
            assert_eq!(y.signed_cycle_type(), sp(&expected));
        }
    }

    #[test]
    fn representatives() {
        assert_eq!(
            class_representative(&sp("3b")),
            sperm(&[-1, -1, -1], &[&[1, 2, 3]])
        );
        assert_eq!(class_representative(&sp("1 1b")), sperm(&[-1, 1], &[]));
        // The listed representative of 2b is [+1,-1;(12)]; ours uses the
        // -1,+1 pattern. Both have type 2b and are conjugate.
        let ours = class_representative(&sp("2b"));
        assert_eq!(ours, sperm(&[-1, 1], &[&[1, 2]]));
        let listed = sperm(&[1, -1], &[&[1, 2]]);
        let flip = sperm(&[-1, 1], &[]);
        assert_eq!(flip.conjugate(&listed).unwrap(), ours);
        for s in signed_partitions_of(5) {
            assert_eq!(class_representative(&s).signed_cycle_type(), s);
        }
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(centralizer_order_bc(&sp("1 1b")), BigUint::from(4u32));
        assert_eq!(centralizer_order_bc(&sp("3")), BigUint::from(6u32));
        assert_eq!(centralizer_order_bc(&sp("1b 2b")), BigUint::from(8u32));
    }

    #[test]
    fn points_encoding_is_a_homomorphism() {
        let a = sperm(&[1, -1, -1], &[&[1, 2]]);
        let b = sperm(&[-1, 1, -1], &[&[2, 3]]);
        let ab = &a * &b;
        let (pa, pb) = (a.to_points(), b.to_points());
        let composed: Vec<u8> = pb.iter().map(|&x| pa[x as usize]).collect();
        assert_eq!(composed, ab.to_points());
        assert_eq!(SignedPermutation::from_points(&ab.to_points()), Some(ab));
        assert_eq!(SignedPermutation::from_points(&[0, 2, 1, 3]), None);
    }

    #[test]
    fn z_classes_bc_small() {
        let two: Vec<Vec<String>> = z_classes_bc(2)
            .iter()
            .map(|g| g.iter().map(|s| s.to_string()).collect())
            .collect();
        assert_eq!(two, vec![vec!["1~2", "1b~2"], vec!["1 1b"], vec!["2"], vec!["2b"]]);
        assert_eq!(z_classes_bc(1), vec![vec![sp("1"), sp("1b")]]);
        let three = z_classes_bc(3);
        assert_eq!(three.len(), 5);
        let group_of = |s: &str| three.iter().position(|g| g.contains(&sp(s))).unwrap();
        assert_eq!(group_of("3"), group_of("3b"));
        assert_eq!(group_of("1 2"), group_of("1b 2"));
        assert_ne!(group_of("1 2"), group_of("1 2b"));
        assert_eq!(group_of("1 2b"), group_of("1b 2b"));
    }

    #[test]
    fn dn_classes_small() {
        let two: Vec<String> = dn_conjugacy_classes(2).iter().map(|l| l.to_string()).collect();
        assert_eq!(two, ["1~2", "1b~2", "2+", "2-"]);
        let three: Vec<String> = dn_conjugacy_classes(3).iter().map(|l| l.to_string()).collect();
        assert_eq!(three, ["1~3", "1 1b~2", "1 2", "1b 2b", "3"]);
        let four = dn_conjugacy_classes(4);
        let halves = four
            .iter()
            .filter(|l| l.signed_partition == sp("4"))
            .count();
        assert_eq!(halves, 2);
    }

    #[test]
    fn dn_grouping_split_rules() {
        let four = z_classes_dn(4);
        assert_eq!(four.len(), 10);
        let plus: SignedClassLabel = "4+".parse().unwrap();
        let minus: SignedClassLabel = "4-".parse().unwrap();
        assert!(four.contains(&vec![plus]));
        assert!(four.contains(&vec![minus]));
        let six = z_classes_dn(6);
        let merged: Vec<SignedClassLabel> = vec!["6+".parse().unwrap(), "6-".parse().unwrap()];
        assert!(six.contains(&merged));
        // 1^2 4, 1b^2 4, (2 4)+, (2 4)- in one z-class
        let group = six
            .iter()
            .find(|g| g.contains(&"1~2 4".parse().unwrap()))
            .unwrap();
        let names: Vec<String> = group.iter().map(|l| l.to_string()).collect();
        assert_eq!(names, ["1~2 4", "1b~2 4", "2 4+", "2 4-"]);
    }

    #[test]
    fn dn_labels_of_representatives() {
        for n in 2..=6 {
            for label in dn_conjugacy_classes(n) {
                assert_eq!(dn_label_of(&label.representative()), Some(label));
            }
        }
    }

    #[test]
    fn label_parsing() {
        assert!("3+".parse::<SignedClassLabel>().is_err());
        let l: SignedClassLabel = "2~2+".parse().unwrap();
        assert_eq!(l.to_string(), "2~2+");
    }
}
