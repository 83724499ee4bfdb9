//! The computations behind each subcommand.

use std::collections::BTreeSet;
use std::path::PathBuf;

use num_bigint::BigUint;
use zclass_core::closed_form::{
    combine_methods, exceptional_counts, z_count_factor, CoxeterType, IrreducibleType, Method,
};
use zclass_core::oracle::{build_group, direct_product, z_classes, GroupTable, OracleConfig, ZClasses};
use zclass_core::reflection::{generate_group, type_a_root_system};
use zclass_core::signed_perm::{cycle_type, dn_label_of, z_classes_bc, z_classes_dn, SignedPermutation};
use zclass_core::{Error, Result};

use crate::record::{number, FactorRecord, OutputRecord, VerifyReport, VerifyRow, SCHEMA_VERSION};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum MethodChoice {
    /// Closed forms and tabulated values only.
    Formula,
    /// Brute force on the enumerated group.
    Oracle,
    /// Closed forms where they exist, the oracle otherwise.
    Auto,
}

pub struct Context {
    pub config: OracleConfig,
    pub cache_dir: Option<PathBuf>,
}

struct FactorResult {
    factor: IrreducibleType,
    classes: BigUint,
    groups: Option<Vec<Vec<String>>>,
    z: BigUint,
    method: Method,
}

fn oracle_run(t: &IrreducibleType, ctx: &Context) -> Result<(GroupTable, ZClasses)> {
    let g = build_group(t, ctx.config.order_cap, ctx.cache_dir.as_deref())?;
    let z = z_classes(&g, &ctx.config)?;
    Ok((g, z))
}

/// Label of each conjugacy class found by the oracle: signed cycle types for
/// B, C and D, cycle types for A, and `c<i>` (class index in representative
/// order) otherwise.
fn class_labels(t: &IrreducibleType, g: &GroupTable, z: &ZClasses) -> Vec<String> {
    z.classes
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let e = g.element(c.representative as usize);
            let signed = || SignedPermutation::from_points(e).expect("signed permutation");
            match t {
                IrreducibleType::B(_) | IrreducibleType::C(_) => {
                    signed().signed_cycle_type().to_string()
                }
                IrreducibleType::D(_) => dn_label_of(&signed()).expect("in D_n").to_string(),
                IrreducibleType::A(_) => cycle_type(e).to_string(),
                _ => format!("c{i}"),
            }
        })
        .collect()
}

fn oracle_groups(t: &IrreducibleType, g: &GroupTable, z: &ZClasses) -> Vec<Vec<String>> {
    let labels = class_labels(t, g, z);
    z.groups
        .iter()
        .map(|grp| grp.iter().map(|&c| labels[c].clone()).collect())
        .collect()
}

fn structural_groups(t: &IrreducibleType) -> Option<Vec<Vec<String>>> {
    match *t {
        IrreducibleType::B(n) | IrreducibleType::C(n) => Some(strings(z_classes_bc(n))),
        IrreducibleType::D(n) => Some(strings(z_classes_dn(n))),
        _ => None,
    }
}

fn strings<T: ToString>(groups: Vec<Vec<T>>) -> Vec<Vec<String>> {
    groups
        .into_iter()
        .map(|g| g.into_iter().map(|x| x.to_string()).collect())
        .collect()
}

fn factor(t: &IrreducibleType, method: MethodChoice, listing: bool, ctx: &Context) -> Result<FactorResult> {
    let use_oracle = match method {
        MethodChoice::Oracle => true,
        MethodChoice::Formula => {
            if matches!(t, IrreducibleType::A(_)) {
                return Err(Error::NoClosedForm(t.to_string()));
            }
            if listing && structural_groups(t).is_none() {
                return Err(Error::Unsupported(format!(
                    "no structural listing for {t}; use --method oracle"
                )));
            }
            false
        }
        MethodChoice::Auto => {
            if listing {
                if t.is_exceptional() {
                    return Err(Error::Unsupported(format!(
                        "no structural listing for {t}; use --method oracle"
                    )));
                }
                structural_groups(t).is_none()
            } else {
                false
            }
        }
    };
    if use_oracle {
        let (g, z) = oracle_run(t, ctx)?;
        return Ok(FactorResult {
            factor: *t,
            classes: BigUint::from(z.class_count()),
            z: BigUint::from(z.z_class_count()),
            groups: listing.then(|| oracle_groups(t, &g, &z)),
            method: Method::Oracle,
        });
    }
    let counted = z_count_factor(t, &ctx.config)?;
    Ok(FactorResult {
        factor: *t,
        classes: t.conjugacy_class_count(),
        z: counted.count,
        groups: if listing { structural_groups(t) } else { None },
        method: counted.method,
    })
}

/// Z-classes of a product are products of z-classes of the factors.
fn product_groups(parts: Vec<Vec<Vec<String>>>) -> Vec<Vec<String>> {
    parts.into_iter().fold(vec![vec![String::new()]], |acc, groups| {
        let mut out = Vec::new();
        for left in &acc {
            for right in &groups {
                let mut merged = Vec::new();
                for a in left {
                    for b in right {
                        merged.push(if a.is_empty() { b.clone() } else { format!("{a} | {b}") });
                    }
                }
                out.push(merged);
            }
        }
        out
    })
}

pub fn count_or_classes(t: &CoxeterType, method: MethodChoice, listing: bool, ctx: &Context) -> Result<OutputRecord> {
    let results = t
        .factors()
        .iter()
        .map(|f| factor(f, method, listing, ctx))
        .collect::<Result<Vec<_>>>()?;
    let classes: BigUint = results.iter().map(|r| r.classes.clone()).product();
    let z: BigUint = results.iter().map(|r| r.z.clone()).product();
    let overall = combine_methods(results.iter().map(|r| r.method));
    let per_factor = results
        .iter()
        .map(|r| FactorRecord {
            factor: r.factor.to_string(),
            conjugacy_class_count: number(&r.classes),
            z_class_count: number(&r.z),
            method: r.method.to_string(),
        })
        .collect();
    let z_classes = listing.then(|| {
        product_groups(results.into_iter().map(|r| r.groups.expect("listing requested")).collect())
    });
    Ok(OutputRecord {
        schema_version: SCHEMA_VERSION,
        group: t.to_string(),
        group_order: number(&t.group_order()),
        conjugacy_class_count: number(&classes),
        z_class_count: number(&z),
        method: overall.to_string(),
        per_factor,
        z_classes,
    })
}

/// `(classes, z-classes, method)` computed without the oracle on the
/// group's own encoding.
fn reference(t: &IrreducibleType, ctx: &Context) -> Result<(BigUint, BigUint, &'static str)> {
    match *t {
        IrreducibleType::A(n) => {
            let g = generate_group(&type_a_root_system(n)?, ctx.config.order_cap)?;
            let z = z_classes(&g, &ctx.config)?;
            Ok((z.class_count().into(), z.z_class_count().into(), "oracle-on-roots"))
        }
        _ if t.is_exceptional() => {
            let c = exceptional_counts(t).expect("exceptional");
            Ok((c.conjugacy_classes.into(), c.z_classes.into(), "table"))
        }
        _ => {
            let z = z_count_factor(t, &ctx.config)?.count;
            Ok((t.conjugacy_class_count(), z, "formula"))
        }
    }
}

fn diff(expected: &[Vec<String>], found: &[Vec<String>]) -> Vec<String> {
    let as_set = |gs: &[Vec<String>]| -> BTreeSet<BTreeSet<String>> {
        gs.iter().map(|g| g.iter().cloned().collect()).collect()
    };
    let (e, f) = (as_set(expected), as_set(found));
    let show = |g: &BTreeSet<String>| {
        format!("{{{}}}", g.iter().cloned().collect::<Vec<_>>().join(", "))
    };
    e.difference(&f)
        .map(|g| format!("formula only: {}", show(g)))
        .chain(f.difference(&e).map(|g| format!("oracle only: {}", show(g))))
        .collect()
}

struct FactorCheck {
    row: VerifyRow,
    group: GroupTable,
    reference_classes: BigUint,
    reference_z: BigUint,
}

fn verify_factor(t: &IrreducibleType, ctx: &Context) -> Result<FactorCheck> {
    let (ref_classes, ref_z, reference_method) = reference(t, ctx)?;
    let (g, z) = oracle_run(t, ctx)?;
    let grouping_diff = match structural_groups(t) {
        Some(expected) => diff(&expected, &oracle_groups(t, &g, &z)),
        None => Vec::new(),
    };
    let (oc, oz) = (BigUint::from(z.class_count()), BigUint::from(z.z_class_count()));
    let pass = oc == ref_classes && oz == ref_z && grouping_diff.is_empty();
    let row = VerifyRow {
        group: t.to_string(),
        group_order: number(&t.group_order()),
        reference_method: reference_method.into(),
        reference_conjugacy_classes: number(&ref_classes),
        reference_z_classes: number(&ref_z),
        oracle_conjugacy_classes: number(&oc),
        oracle_z_classes: number(&oz),
        pass,
        grouping_diff,
    };
    Ok(FactorCheck {
        row,
        group: g,
        reference_classes: ref_classes,
        reference_z: ref_z,
    })
}

/// One row per factor; products get an extra row comparing the oracle on the
/// full direct product with the product of the factor references.
pub fn verify(types: &[CoxeterType], ctx: &Context) -> Result<VerifyReport> {
    let mut rows = Vec::new();
    for t in types {
        let mut product: Option<GroupTable> = None;
        let (mut ref_classes, mut ref_z) = (BigUint::from(1u32), BigUint::from(1u32));
        for f in t.factors() {
            let check = verify_factor(f, ctx)?;
            ref_classes *= check.reference_classes;
            ref_z *= check.reference_z;
            rows.push(check.row);
            product = Some(match product {
                None => check.group,
                Some(p) => direct_product(&p, &check.group, ctx.config.order_cap)?,
            });
        }
        if t.factors().len() > 1 {
            let g = product.expect("at least one factor");
            let z = z_classes(&g, &ctx.config)?;
            let (oc, oz) = (BigUint::from(z.class_count()), BigUint::from(z.z_class_count()));
            rows.push(VerifyRow {
                group: t.to_string(),
                group_order: number(&t.group_order()),
                reference_method: "product".into(),
                pass: oc == ref_classes && oz == ref_z,
                reference_conjugacy_classes: number(&ref_classes),
                reference_z_classes: number(&ref_z),
                oracle_conjugacy_classes: number(&oc),
                oracle_z_classes: number(&oz),
                grouping_diff: Vec::new(),
            });
        }
    }
    let pass = rows.iter().all(|r| r.pass);
    Ok(VerifyReport {
        schema_version: SCHEMA_VERSION,
        rows,
        pass,
    })
}

/// B1..B5, D2..D6, I2(3)..I2(16), A1..A5.
pub fn small_sweep() -> Vec<CoxeterType> {
    (1..=5)
        .map(IrreducibleType::B)
        .chain((2..=6).map(IrreducibleType::D))
        .chain((3..=16).map(IrreducibleType::I2))
        .chain((1..=5).map(IrreducibleType::A))
        .map(CoxeterType::from)
        .collect()
}
