use std::path::Path;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::group::GroupTable;
use crate::closed_form::IrreducibleType;
use crate::error::{Error, Result};
use crate::reflection::{build_root_system, generate_group_cached};
use crate::signed_perm::{order_bc, SignedPermutation};

fn ensure_within(order: BigUint, cap: u64) -> Result<()> {
    match order.to_u64() {
        Some(o) if o <= cap => Ok(()),
        o => Err(Error::CapExceeded {
            order: o.unwrap_or(u64::MAX),
            cap,
        }),
    }
}

fn factorial(n: u32) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// Order `2^(n-1) n!` of `D_n`.
pub fn order_d(n: u32) -> BigUint {
    order_bc(n) / 2u32
}

/// Dihedral group of order `2m` acting on the vertices of an `m`-gon.
pub fn build_dihedral(m: u32, cap: u64) -> Result<GroupTable> {
    if !(3..=256).contains(&m) {
        return Err(Error::InvalidArgument(format!("dihedral m = {m} outside 3..=256")));
    }
    ensure_within(BigUint::from(2 * m), cap)?;
    let rotation: Vec<u8> = (0..m).map(|i| ((i + 1) % m) as u8).collect();
    let reflection: Vec<u8> = (0..m).map(|i| ((m - i) % m) as u8).collect();
    GroupTable::from_generators(format!("I2({m})"), m as usize, &[rotation, reflection], cap)
}

/// Symmetric group on `n` points, generated by adjacent transpositions.
pub fn build_symmetric(n: u32, cap: u64) -> Result<GroupTable> {
    if !(1..=256).contains(&n) {
        return Err(Error::InvalidArgument(format!("symmetric degree {n} outside 1..=256")));
    }
    ensure_within(factorial(n), cap)?;
    let gens: Vec<Vec<u8>> = (0..n as usize - 1)
        .map(|i| {
            let mut g: Vec<u8> = (0..n).map(|x| x as u8).collect();
            g.swap(i, i + 1);
            g
        })
        .collect();
    GroupTable::from_generators(format!("S{n}"), n as usize, &gens, cap)
}

fn adjacent_swap(n: usize, i: usize) -> SignedPermutation {
    let mut perm: Vec<u32> = (0..n as u32).collect();
    perm.swap(i, i + 1);
    SignedPermutation::new(vec![1; n], perm).expect("valid")
}

fn check_rank(n: u32) -> Result<()> {
    if !(1..=128).contains(&n) {
        return Err(Error::InvalidArgument(format!("rank {n} outside 1..=128")));
    }
    Ok(())
}

/// `C2 wr S_n` acting on the `2n` points `±e_i`.
pub fn build_wreath_bc(n: u32, cap: u64) -> Result<GroupTable> {
    check_rank(n)?;
    ensure_within(order_bc(n), cap)?;
    let n = n as usize;
    let mut signs = vec![1i8; n];
    signs[0] = -1;
    let flip = SignedPermutation::new(signs, (0..n as u32).collect())?;
    let gens: Vec<Vec<u8>> = (0..n - 1)
        .map(|i| adjacent_swap(n, i))
        .chain(std::iter::once(flip))
        .map(|g| g.to_points())
        .collect();
    GroupTable::from_generators(format!("B{n}"), 2 * n, &gens, cap)
}

/// `D_n`: the elements of `C2 wr S_n` whose signs multiply to `+1`.
pub fn build_d(n: u32, cap: u64) -> Result<GroupTable> {
    if !(2..=128).contains(&n) {
        return Err(Error::InvalidArgument(format!("D_n needs 2 <= n <= 128, got {n}")));
    }
    ensure_within(order_d(n), cap)?;
    let bc = build_wreath_bc(n, cap.saturating_mul(2))?;
    let elements: Vec<Vec<u8>> = bc
        .elements()
        .filter(|e| SignedPermutation::from_points(e).is_some_and(|x| x.in_d_n()))
        .map(|e| e.to_vec())
        .collect();
    let n = n as usize;
    // Coxeter generators: adjacent swaps and e_1 <-> -e_2.
    let mut signs = vec![1i8; n];
    signs[0] = -1;
    signs[1] = -1;
    let mut perm: Vec<u32> = (0..n as u32).collect();
    perm.swap(0, 1);
    let twisted = SignedPermutation::new(signs, perm)?;
    let gens: Vec<Vec<u8>> = (0..n - 1)
        .map(|i| adjacent_swap(n, i))
        .chain(std::iter::once(twisted))
        .map(|g| g.to_points())
        .collect();
    GroupTable::from_elements(format!("D{n}"), 2 * n, elements, &gens)
}

/// `G x H` acting on the disjoint union of the two point sets.
pub fn direct_product(g: &GroupTable, h: &GroupTable, cap: u64) -> Result<GroupTable> {
    let order = BigUint::from(g.order()) * BigUint::from(h.order());
    ensure_within(order, cap)?;
    let (dg, dh) = (g.degree(), h.degree());
    if dg + dh > 256 {
        return Err(Error::InvalidArgument("product degree above 256".into()));
    }
    let id_g: Vec<u8> = (0..dg as u8).collect();
    let id_h: Vec<u8> = (0..dh as u8).collect();
    let embed = |a: &[u8], b: &[u8]| -> Vec<u8> {
        a.iter()
            .copied()
            .chain(b.iter().map(|&x| x + dg as u8))
            .collect()
    };
    let mut gens: Vec<Vec<u8>> = g
        .generators()
        .iter()
        .map(|&s| embed(g.element(s as usize), &id_h))
        .collect();
    gens.extend(h.generators().iter().map(|&s| embed(&id_g, h.element(s as usize))));
    GroupTable::from_generators(format!("{} x {}", g.name(), h.name()), dg + dh, &gens, cap)
}

/// The permutation group the oracle uses for an irreducible type: `S_{n+1}`
/// on points for `A_n`, signed permutations for B, C and D, the `m`-gon for
/// `I2(m)`, and the action on roots for the exceptional types. Exceptional
/// tables may be cached under `cache_dir`.
pub fn build_group(t: &IrreducibleType, cap: u64, cache_dir: Option<&Path>) -> Result<GroupTable> {
    match *t {
        IrreducibleType::A(n) => build_symmetric(n + 1, cap),
        IrreducibleType::B(n) | IrreducibleType::C(n) => build_wreath_bc(n, cap),
        IrreducibleType::D(n) => build_d(n, cap),
        IrreducibleType::I2(m) => build_dihedral(m, cap),
        IrreducibleType::E8 => {
            // always refused: the order is far above even the large cap
            ensure_within(t.group_order(), cap)?;
            Err(Error::Unsupported("E8 is counted by table lookup only".into()))
        }
        _ => {
            ensure_within(t.group_order(), cap)?;
            let rs = build_root_system(t)?;
            generate_group_cached(&rs, cap, cache_dir)
        }
    }
}
