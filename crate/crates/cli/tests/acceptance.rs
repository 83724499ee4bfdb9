//! Acceptance suite: one PASS/FAIL line per criterion, exit status non-zero
//! if any criterion fails. All comparisons are exact; time limits are noted
//! on each line. Set `ZCLASS_ACCEPT_E7=1` to include the E7 run.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use zclass_core::closed_form::{
    exceptional_counts, z_count_bc, z_count_d, z_count_dihedral, IrreducibleType,
};
use zclass_core::combinatorics::{delta_prime_set, delta_set, even_sum_tuple_count, zeta};
use zclass_core::oracle::{
    build_d, build_dihedral, build_group, build_wreath_bc, centralizer, conjugacy_classes,
    direct_product, z_classes, GroupTable, OracleConfig,
};
use zclass_core::reflection::{build_root_system, generate_group};
use zclass_core::signed_perm::{centralizer_order_bc, dn_label_of, SignedPermutation};
use zclass_core::SignedPartition;

type Outcome = Result<String, String>;

fn check(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn cfg() -> OracleConfig {
    OracleConfig::default()
}

fn oracle_z(g: &GroupTable) -> usize {
    z_classes(g, &cfg()).unwrap().z_class_count()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let cap = cfg().order_cap;
    for n in 1..=5 {
        let z = oracle_z(&build_wreath_bc(n, cap).unwrap());
        check(BigUint::from(z) == z_count_bc(n), format!("B{n}: oracle {z}, formula {}", z_count_bc(n)))?;
    }
    for n in 2..=6 {
        let z = oracle_z(&build_d(n, cap).unwrap());
        check(BigUint::from(z) == z_count_d(n), format!("D{n}: oracle {z}, formula {}", z_count_d(n)))?;
    }
    for m in 3..=16 {
        let z = oracle_z(&build_dihedral(m, cap).unwrap());
        check(
            BigUint::from(z) == z_count_dihedral(m),
            format!("I2({m}): oracle {z}, formula {}", z_count_dihedral(m)),
        )?;
    }
    let t = start.elapsed();
    check(t < Duration::from_secs(120), format!("took {t:.1?}, limit 120 s"))?;
    Ok(format!("B1..B5, D2..D6, I2(3..16) exact; {:.1}s (limit 120 s)", t.as_secs_f64()))
}

fn centralizer_table(n: u32) -> Vec<(String, usize)> {
    let g = build_wreath_bc(n, cfg().order_cap).unwrap();
    conjugacy_classes(&g, &cfg())
        .unwrap()
        .iter()
        .map(|c| {
            let x = SignedPermutation::from_points(g.element(c.representative as usize)).unwrap();
            (x.signed_cycle_type().to_string(), centralizer(&g, c.representative).order())
        })
        .collect()
}

fn compare_table(n: u32, expected: &[(&str, usize)]) -> Result<(), String> {
    let found: BTreeSet<(String, usize)> = centralizer_table(n).into_iter().collect();
    let want: BTreeSet<(String, usize)> = expected.iter().map(|&(l, s)| (l.to_string(), s)).collect();
    check(found == want, format!("n={n}: oracle {found:?}"))?;
    for &(label, size) in expected {
        let sp: SignedPartition = label.parse().unwrap();
        check(
            centralizer_order_bc(&sp) == BigUint::from(size),
            format!("order formula for {label}"),
        )?;
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    compare_table(2, &[("1~2", 8), ("1 1b", 4), ("1b~2", 8), ("2", 4), ("2b", 4)])?;
    compare_table(
        3,
        &[
            ("1~3", 48),
            ("1~2 1b", 16),
            ("1 1b~2", 16),
            ("1b~3", 48),
            ("1 2", 8),
            ("1b 2", 8),
            ("1 2b", 8),
            ("1b 2b", 8),
            ("3", 6),
            ("3b", 6),
        ],
    )?;
    Ok("C2wrS2: 5 classes 8,4,8,4,4; C2wrS3: 10 classes 48,16,16,48,8,8,8,8,6,6; exact".into())
}

fn criterion_3() -> Outcome {
    check(zeta(8) == BigUint::from(2u32), "zeta(8)")?;
    check(delta_set(2).is_empty(), "delta(2)")?;
    check(delta_set(4).len() == 1, "delta(4)")?;
    check(delta_prime_set(2).len() == 2, "delta'(2)")?;
    check(delta_prime_set(4).len() == 4, "delta'(4)")?;
    for n in (1..=15).step_by(2) {
        check(delta_prime_set(n).is_empty(), format!("delta'({n})"))?;
    }
    Ok("zeta(8)=2, delta(2)=0, delta(4)=1, delta'(2)=2, delta'(4)=4, delta'(odd<=15)=0; exact".into())
}

fn brute_even_tuples(d: &[u64]) -> u64 {
    let total: u64 = d.iter().product();
    (0..total)
        .filter(|&code| {
            let mut c = code;
            let mut sum = 0;
            for &di in d {
                sum += c % di;
                c /= di;
            }
            sum % 2 == 0
        })
        .count() as u64
}

fn criterion_4() -> Outcome {
    let mut rng = StdRng::seed_from_u64(2_009);
    let mut tested = 0;
    while tested < 200 {
        let len = rng.gen_range(1..=6);
        let d: Vec<u64> = (0..len).map(|_| rng.gen_range(1..=20)).collect();
        if d.iter().product::<u64>() > 100_000 {
            continue;
        }
        let brute = brute_even_tuples(&d);
        check(
            even_sum_tuple_count(&d) == BigUint::from(brute),
            format!("d = {d:?}: brute force {brute}"),
        )?;
        tested += 1;
    }
    Ok("200 seeded random d with prod <= 1e5 match enumeration; exact".into())
}

fn criterion_5(include_e7: bool) -> Vec<(String, Outcome)> {
    let mut rows = vec![
        (IrreducibleType::H3, 1u64),
        (IrreducibleType::F4, 30),
        (IrreducibleType::H4, 120),
        (IrreducibleType::E6, 600),
    ];
    if include_e7 {
        rows.push((IrreducibleType::E7, 6 * 3600));
    }
    let mut out = Vec::new();
    for (t, limit) in rows {
        let config = if t == IrreducibleType::E7 {
            OracleConfig::large()
        } else {
            cfg()
        };
        let start = Instant::now();
        let g = generate_group(&build_root_system(&t).unwrap(), config.order_cap).unwrap();
        let z = z_classes(&g, &config).unwrap();
        let t_el = start.elapsed();
        let want = exceptional_counts(&t).unwrap();
        let got = (z.class_count() as u32, z.z_class_count() as u32);
        let outcome = if got != (want.conjugacy_classes, want.z_classes) {
            Err(format!("got {got:?}"))
        } else if t_el > Duration::from_secs(limit) {
            Err(format!("took {t_el:.1?}, limit {limit} s"))
        } else {
            Ok(format!(
                "{t}: ({}, {}) exact in {:.2}s (limit {limit} s)",
                got.0,
                got.1,
                t_el.as_secs_f64()
            ))
        };
        out.push((format!("5 {t}"), outcome));
    }
    out.push((
        "5 E8".into(),
        Ok(match build_group(&IrreducibleType::E8, OracleConfig::large().order_cap, None) {
            Err(_) => "table lookup only by design; oracle refuses order 696729600".into(),
            Ok(_) => unreachable!("E8 is never enumerated"),
        }),
    ));
    out
}

fn dn_grouping(n: u32) -> Vec<BTreeSet<String>> {
    let g = build_d(n, cfg().order_cap).unwrap();
    let z = z_classes(&g, &cfg()).unwrap();
    z.representatives()
        .iter()
        .map(|grp| {
            grp.iter()
                .map(|&r| {
                    let x = SignedPermutation::from_points(g.element(r as usize)).unwrap();
                    dn_label_of(&x).unwrap().to_string()
                })
                .collect()
        })
        .collect()
}

fn group_containing<'a>(groups: &'a [BTreeSet<String>], label: &str) -> &'a BTreeSet<String> {
    groups.iter().find(|g| g.contains(label)).expect("label present")
}

fn set(labels: &[&str]) -> BTreeSet<String> {
    labels.iter().map(|s| s.to_string()).collect()
}

fn criterion_6() -> Outcome {
    let d4 = dn_grouping(4);
    let d6 = dn_grouping(6);
    check(group_containing(&d4, "4+") == &set(&["4+"]), "D4: 4+ not alone")?;
    check(group_containing(&d4, "4-") == &set(&["4-"]), "D4: 4- not alone")?;
    check(group_containing(&d6, "6+") == &set(&["6+", "6-"]), "D6: 6+/6- not merged")?;
    check(
        group_containing(&d6, "1~2 4") == &set(&["1~2 4", "1b~2 4", "2 4+", "2 4-"]),
        format!("D6: {:?}", group_containing(&d6, "1~2 4")),
    )?;
    // In D4 no M with parts >= 4 sums to 2, so the merged family is empty
    // there; the nearest candidate 1^2 2 must stay apart from 2^2+/-.
    let near = group_containing(&d4, "1~2 2");
    check(!near.contains("2~2+") && !near.contains("2~2-"), "D4: 1~2 2 merged with 2~2 halves")?;
    Ok("D4 {4+},{4-} apart; D6 {6+,6-} merged; D6 {1~2 4,1b~2 4,2 4+,2 4-} one class; D4 family empty; exact".into())
}

fn criterion_7() -> Outcome {
    let cap = cfg().order_cap;
    let pool: Vec<IrreducibleType> = (1..=4)
        .map(IrreducibleType::A)
        .chain((1..=4).map(IrreducibleType::B))
        .chain((2..=4).map(IrreducibleType::D))
        .chain((3..=16).map(IrreducibleType::I2))
        .chain([IrreducibleType::H3])
        .collect();
    let mut rng = StdRng::seed_from_u64(2_001);
    let mut pairs = Vec::new();
    while pairs.len() < 10 {
        let a = pool[rng.gen_range(0..pool.len())];
        let b = pool[rng.gen_range(0..pool.len())];
        if a.group_order() * b.group_order() <= BigUint::from(2000u32) {
            pairs.push((a, b));
        }
    }
    for (a, b) in &pairs {
        let ga = build_group(a, cap, None).unwrap();
        let gb = build_group(b, cap, None).unwrap();
        let za = oracle_z(&ga);
        let zb = oracle_z(&gb);
        let zp = oracle_z(&direct_product(&ga, &gb, cap).unwrap());
        check(zp == za * zb, format!("{a} x {b}: {zp} != {za} * {zb}"))?;
    }
    let names: Vec<String> = pairs.iter().map(|(a, b)| format!("{a}x{b}")).collect();
    Ok(format!("10 seeded pairs exact: {}", names.join(", ")))
}

fn criterion_8() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_zclass"))
            .args(["verify", "--all-small", "--format", "json"])
            .output()
            .expect("run zclass")
    };
    let first = run();
    let second = run();
    check(first.status.success(), format!("exit status {:?}", first.status.code()))?;
    check(first.stdout == second.stdout, "outputs differ")?;
    Ok(format!("two runs byte-identical ({} bytes)", first.stdout.len()))
}

fn report(name: &str, outcome: Outcome) -> bool {
    match outcome {
        Ok(detail) => {
            println!("PASS criterion {name}: {detail}");
            true
        }
        Err(why) => {
            println!("FAIL criterion {name}: {why}");
            false
        }
    }
}

fn main() {
    let include_e7 = std::env::var("ZCLASS_ACCEPT_E7").is_ok_and(|v| v == "1");
    let mut failed = 0;
    let mut tally = |name: &str, outcome: Outcome| {
        if !report(name, outcome) {
            failed += 1;
        }
    };
    tally("1", criterion_1());
    tally("2", criterion_2());
    tally("3", criterion_3());
    tally("4", criterion_4());
    for (name, outcome) in criterion_5(include_e7) {
        tally(&name, outcome);
    }
    if !include_e7 {
        println!("SKIP criterion 5 E7: opt-in long run, set ZCLASS_ACCEPT_E7=1");
    }
    tally("6", criterion_6());
    tally("7", criterion_7());
    tally("8", criterion_8());
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
