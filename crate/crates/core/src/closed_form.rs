//! Coxeter type descriptors and closed-form z-class counts.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::combinatorics::{
    delta_prime_set, delta_set, even_sum_tuple_count, partitions_of, zeta, Partition,
};
use crate::error::{Error, Result, TypeParseError};
use crate::oracle::{build_symmetric, z_classes, OracleConfig};

/// Largest rank accepted for the infinite families B, C and D; the sums
/// run over all partitions of the rank.
pub const MAX_CLASSICAL_RANK: u32 = 64;

/// An irreducible finite Coxeter type. `I2(m)` is the dihedral group of
/// order `2m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IrreducibleType {
    A(u32),
    B(u32),
    C(u32),
    D(u32),
    I2(u32),
    F4,
    E6,
    E7,
    E8,
    H3,
    H4,
}

/// Conjugacy-class and z-class counts of the exceptional groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExceptionalCounts {
    pub conjugacy_classes: u32,
    pub z_classes: u32,
}

impl IrreducibleType {
    pub fn is_exceptional(&self) -> bool {
        matches!(
            self,
            Self::F4 | Self::E6 | Self::E7 | Self::E8 | Self::H3 | Self::H4
        )
    }

    pub fn group_order(&self) -> BigUint {
        let fact = |n: u32| (1..=n).map(BigUint::from).product::<BigUint>();
        match *self {
            Self::A(n) => fact(n + 1),
            Self::B(n) | Self::C(n) => BigUint::from(2u32).pow(n) * fact(n),
            Self::D(n) => BigUint::from(2u32).pow(n - 1) * fact(n),
            Self::I2(m) => BigUint::from(2 * m as u64),
            Self::F4 => 1152u32.into(),
            Self::E6 => 51_840u32.into(),
            Self::E7 => 2_903_040u32.into(),
            Self::E8 => 696_729_600u32.into(),
            Self::H3 => 120u32.into(),
            Self::H4 => 14_400u32.into(),
        }
    }

    /// Number of conjugacy classes, counted combinatorially.
    pub fn conjugacy_class_count(&self) -> BigUint {
        match *self {
            Self::A(n) => BigUint::from(partitions_of(n + 1).len()),
            Self::B(n) | Self::C(n) => partitions_of(n)
                .iter()
                .map(|p| {
                    p.runs()
                        .iter()
                        .map(|&(_, m)| BigUint::from(m + 1))
                        .product::<BigUint>()
                })
                .sum(),
            Self::D(n) => partitions_of(n)
                .iter()
                .map(|p| {
                    let bounds: Vec<u64> = p.runs().iter().map(|&(_, m)| m as u64 + 1).collect();
                    let split = p.parts().all(|x| x % 2 == 0) as u32;
                    even_sum_tuple_count(&bounds) + split
                })
                .sum(),
            Self::I2(m) if m % 2 == 1 => BigUint::from((m + 3) / 2),
            Self::I2(m) => BigUint::from(m / 2 + 3),
            _ => BigUint::from(exceptional_counts(self).expect("exceptional").conjugacy_classes),
        }
    }
}

impl fmt::Display for IrreducibleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::A(n) => write!(f, "A{n}"),
            Self::B(n) => write!(f, "B{n}"),
            Self::C(n) => write!(f, "C{n}"),
            Self::D(n) => write!(f, "D{n}"),
            Self::I2(m) => write!(f, "I2({m})"),
            Self::F4 => f.write_str("F4"),
            Self::E6 => f.write_str("E6"),
            Self::E7 => f.write_str("E7"),
            Self::E8 => f.write_str("E8"),
            Self::H3 => f.write_str("H3"),
            Self::H4 => f.write_str("H4"),
        }
    }
}

/// A finite Coxeter type: a product of irreducible factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterType {
    factors: Vec<IrreducibleType>,
}

impl CoxeterType {
    pub fn new(factors: Vec<IrreducibleType>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidArgument("a Coxeter type needs a factor".into()));
        }
        Ok(CoxeterType { factors })
    }

    pub fn factors(&self) -> &[IrreducibleType] {
        &self.factors
    }

    pub fn group_order(&self) -> BigUint {
        self.factors.iter().map(|t| t.group_order()).product()
    }

    pub fn conjugacy_class_count(&self) -> BigUint {
        self.factors.iter().map(|t| t.conjugacy_class_count()).product()
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl From<IrreducibleType> for CoxeterType {
    fn from(t: IrreducibleType) -> Self {
        CoxeterType { factors: vec![t] }
    }
}

struct Parser {
    /// Non-whitespace characters with their offsets in the input.
    chars: Vec<(usize, char)>,
    at: usize,
    len: usize,
}

impl Parser {
    fn position(&self) -> usize {
        self.chars.get(self.at).map_or(self.len, |&(p, _)| p)
    }

    fn error(&self, message: impl Into<String>) -> TypeParseError {
        TypeParseError::Syntax {
            position: self.position(),
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c.to_ascii_uppercase())
    }

    fn expect(&mut self, want: char) -> std::result::Result<(), TypeParseError> {
        if self.peek() == Some(want) {
            self.at += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected `{want}`")))
        }
    }

    fn number(&mut self) -> std::result::Result<u32, TypeParseError> {
        let start = self.at;
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.at += 1;
        }
        if digits.is_empty() {
            return Err(self.error("expected a number"));
        }
        digits.parse().map_err(|_| TypeParseError::Syntax {
            position: self.chars[start].0,
            message: "number too large".into(),
        })
    }

    fn factor(&mut self) -> std::result::Result<IrreducibleType, TypeParseError> {
        let letter = self.peek().ok_or_else(|| self.error("expected a type letter"))?;
        if !"ABCDEFHI".contains(letter) {
            return Err(self.error(format!("unknown type letter `{letter}`")));
        }
        self.at += 1;
        let rank_error = |reason: &str, factor: String| TypeParseError::Rank {
            factor,
            reason: reason.into(),
        };
        if letter == 'I' {
            self.expect('2')?;
            self.expect('(')?;
            let m = self.number()?;
            self.expect(')')?;
            if m < 3 {
                return Err(rank_error("I2(m) needs m >= 3", format!("I2({m})")));
            }
            return Ok(IrreducibleType::I2(m));
        }
        let n = self.number()?;
        let name = format!("{letter}{n}");
        let classical = |min: u32, make: fn(u32) -> IrreducibleType| {
            if n < min {
                Err(rank_error(&format!("rank must be at least {min}"), name.clone()))
            } else if n > MAX_CLASSICAL_RANK {
                Err(rank_error(
                    &format!("ranks above {MAX_CLASSICAL_RANK} are not supported"),
                    name.clone(),
                ))
            } else {
                Ok(make(n))
            }
        };
        match (letter, n) {
            ('A', _) if (1..=255).contains(&n) => Ok(IrreducibleType::A(n)),
            ('A', _) => Err(rank_error("rank must be in 1..=255", name)),
            ('B', _) => classical(1, IrreducibleType::B),
            ('C', _) => classical(1, IrreducibleType::C),
            ('D', _) => classical(2, IrreducibleType::D),
            ('E', 6) => Ok(IrreducibleType::E6),
            ('E', 7) => Ok(IrreducibleType::E7),
            ('E', 8) => Ok(IrreducibleType::E8),
            ('E', _) => Err(rank_error("E has rank 6, 7 or 8", name)),
            ('F', 4) => Ok(IrreducibleType::F4),
            ('F', _) => Err(rank_error("F has rank 4", name)),
            ('H', 3) => Ok(IrreducibleType::H3),
            ('H', 4) => Ok(IrreducibleType::H4),
            _ => Err(rank_error("H has rank 3 or 4", name)),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = TypeParseError;

    /// Grammar `factor ("x" factor)*`, ignoring case and whitespace.
    /// Error positions are character offsets into `text`.
    fn from_str(text: &str) -> std::result::Result<Self, Self::Err> {
        let chars: Vec<(usize, char)> = text
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        let mut p = Parser {
            chars,
            at: 0,
            len: text.chars().count(),
        };
        if p.chars.is_empty() {
            return Err(p.error("empty type"));
        }
        let mut factors = vec![p.factor()?];
        while p.peek().is_some() {
            p.expect('X')?;
            factors.push(p.factor()?);
        }
        Ok(CoxeterType { factors })
    }
}

impl FromStr for IrreducibleType {
    type Err = TypeParseError;

    fn from_str(text: &str) -> std::result::Result<Self, Self::Err> {
        let t: CoxeterType = text.parse()?;
        match t.factors.as_slice() {
            [one] => Ok(*one),
            _ => Err(TypeParseError::Syntax {
                position: 0,
                message: "expected a single irreducible type".into(),
            }),
        }
    }
}

/// z-classes of `C2 wr S_n`: the sum of [`Partition::bc_weight`] over all
/// partitions of `n`.
pub fn z_count_bc(n: u32) -> BigUint {
    partitions_of(n).iter().map(Partition::bc_weight).sum()
}

/// z-classes of `D_n`, `n >= 2`. Odd `n` agrees with `C2 wr S_n`. For even
/// `n` the weights of partitions without an odd part of odd multiplicity are
/// halved (rounding up), then `zeta(n - 2)` is subtracted and the number of
/// such partitions of `n / 2` added.
pub fn z_count_d(n: u32) -> BigUint {
    assert!(n >= 2, "D_n needs n >= 2");
    if n % 2 == 1 {
        return z_count_bc(n);
    }
    let full: BigUint = delta_set(n).iter().map(Partition::bc_weight).sum();
    let halved: BigUint = delta_prime_set(n)
        .iter()
        .map(|p| (p.bc_weight() + 1u32) / 2u32)
        .sum();
    full + halved + BigUint::from(delta_prime_set(n / 2).len()) - zeta(n - 2)
}

/// z-classes of the dihedral group of order `2m`: 4 when `4 | m`, else 3.
pub fn z_count_dihedral(m: u32) -> BigUint {
    assert!(m >= 3, "I2(m) needs m >= 3");
    BigUint::from(if m.is_multiple_of(4) { 4u32 } else { 3 })
}

/// Tabulated counts for F4, E6, E7, E8, H3, H4; `None` for other types.
pub fn exceptional_counts(t: &IrreducibleType) -> Option<ExceptionalCounts> {
    let (conjugacy_classes, z_classes) = match t {
        IrreducibleType::F4 => (25, 16),
        IrreducibleType::E6 => (25, 24),
        IrreducibleType::E7 => (60, 28),
        IrreducibleType::E8 => (112, 65),
        IrreducibleType::H3 => (10, 4),
        IrreducibleType::H4 => (34, 15),
        _ => return None,
    };
    Some(ExceptionalCounts {
        conjugacy_classes,
        z_classes,
    })
}

pub fn z_count_exceptional(t: &IrreducibleType) -> Result<BigUint> {
    exceptional_counts(t)
        .map(|c| BigUint::from(c.z_classes))
        .ok_or_else(|| Error::InvalidArgument(format!("{t} is not exceptional")))
}

/// How a count was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Formula,
    Table,
    Oracle,
    /// Factors were counted by more than one method.
    Mixed,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Table => "table",
            Method::Oracle => "oracle",
            Method::Mixed => "mixed",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorCount {
    pub factor: IrreducibleType,
    pub count: BigUint,
    pub method: Method,
}

/// z-class count of a product type: the product of its factor counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZCountResult {
    pub total: BigUint,
    pub per_factor: Vec<FactorCount>,
    pub method: Method,
}

/// Count for one irreducible factor. Type A has no closed form and is
/// counted by the oracle on `S_{n+1}` when `(n+1)!` fits under the cap.
pub fn z_count_factor(t: &IrreducibleType, config: &OracleConfig) -> Result<FactorCount> {
    let (count, method) = match *t {
        IrreducibleType::A(n) => {
            let order = t.group_order();
            if order > BigUint::from(config.order_cap) {
                return Err(Error::NeedsOracleBeyondCap {
                    factor: t.to_string(),
                    order: order.to_u64().unwrap_or(u64::MAX),
                    cap: config.order_cap,
                });
            }
            let group = build_symmetric(n + 1, config.order_cap)?;
            let z = z_classes(&group, config)?;
            (BigUint::from(z.z_class_count()), Method::Oracle)
        }
        IrreducibleType::B(n) | IrreducibleType::C(n) => (z_count_bc(n), Method::Formula),
        IrreducibleType::D(n) => (z_count_d(n), Method::Formula),
        IrreducibleType::I2(m) => (z_count_dihedral(m), Method::Formula),
        _ => (z_count_exceptional(t)?, Method::Table),
    };
    Ok(FactorCount {
        factor: *t,
        count,
        method,
    })
}

/// The z-class count of `t`, multiplied across factors.
pub fn z_count(t: &CoxeterType, config: &OracleConfig) -> Result<ZCountResult> {
    let per_factor = t
        .factors()
        .iter()
        .map(|f| z_count_factor(f, config))
        .collect::<Result<Vec<_>>>()?;
    let total = per_factor.iter().fold(BigUint::one(), |acc, f| acc * &f.count);
    let method = combine_methods(per_factor.iter().map(|f| f.method));
    Ok(ZCountResult {
        total,
        per_factor,
        method,
    })
}

/// The common method, or [`Method::Mixed`] if they differ.
pub fn combine_methods(methods: impl IntoIterator<Item = Method>) -> Method {
    let mut it = methods.into_iter();
    let first = it.next().unwrap_or(Method::Formula);
    if it.all(|m| m == first) {
        first
    } else {
        Method::Mixed
    }
}
