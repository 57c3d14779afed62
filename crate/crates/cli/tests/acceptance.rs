//! Acceptance criteria, one line each. Runs without the libtest harness so the
//! lines always reach stdout; exits nonzero if any criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use fkm_core::census::sphere31_profiles;
use fkm_core::clifford::{build_irreducible, build_system, module_class_counts, ModuleClass, ModuleProfile};
use fkm_core::munzner::verify_munzner_identities;
use fkm_core::sampling::DEFAULT_SEED;
use fkm_core::symmetry::{
    centralizer_basis, cohomogeneity, isotropy_basis, preserves_foliation, so_basis, spin_basis, standard_quaternionic,
    QuaternionicStructure,
};
use fkm_core::weights::{chamber_reduce, in_chamber, WeightCase, WeightSystem};
use fkm_core::{Rational, RationalCliffordSystem, RationalForm, RationalTorusElement};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl Into<String>) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn table1_systems() -> Vec<RationalCliffordSystem> {
    sphere31_profiles()
        .into_iter()
        .map(|p| build_system::<Rational>(p).expect("table profile builds"))
        .collect()
}

fn fkm_lab(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_fkm-lab"))
        .args(args)
        .env_remove("FKM_LAB_DATA")
        .output()
        .expect("spawn fkm-lab");
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap_or(-1), json)
}

fn labels(v: &Value) -> Vec<String> {
    v.as_array()
        .map(|a| {
            a.iter()
                .map(|t| t["label"].as_str().unwrap_or("?").to_string())
                .collect()
        })
        .unwrap_or_default()
}

fn clifford_validity() -> Check {
    let mut systems = table1_systems();
    for m in 1..=9 {
        systems.push(build_irreducible::<Rational>(m, ModuleClass::Plus).map_err(|e| e.to_string())?);
        if m % 4 == 0 {
            systems.push(build_irreducible::<Rational>(m, ModuleClass::Minus).map_err(|e| e.to_string())?);
        }
    }
    for sys in &systems {
        let v = sys.violations();
        ensure(
            v.is_empty(),
            format!("m={} dim={}: {:?}", sys.m(), sys.dim(), v.first()),
        )?;
    }
    ensure(systems.len() == 12 + 11, format!("checked {} systems", systems.len()))
}

fn munzner_identities() -> Check {
    for sys in table1_systems() {
        let report = verify_munzner_identities(&RationalForm::new(&sys), 100, DEFAULT_SEED);
        ensure(
            report.passed(),
            format!("{}: {:?}", report.system_tag, report.counterexample),
        )?;
    }
    Ok(())
}

fn theorem_counts() -> Check {
    let (code, v) = fkm_lab(&["structures", "f87", "--format", "json"]);
    ensure(code == 0, format!("structures f87 exited {code}"))?;
    ensure(
        labels(&v["J_chamber"]) == ["2e1", "e", "-e"],
        format!("f87 chamber {:?}", labels(&v["J_chamber"])),
    )?;
    let reps: Vec<String> = v["classes"]
        .as_array()
        .map(|a| {
            a.iter()
                .map(|c| c["representative"]["label"].as_str().unwrap_or("?").to_string())
                .collect()
        })
        .unwrap_or_default();
    ensure(reps == ["2e1", "e"], format!("f87 classes {reps:?}"))?;
    ensure(
        v["N_C"] == 2 && v["N_H"] == 1,
        format!("f87 N_C={} N_H={}", v["N_C"], v["N_H"]),
    )?;

    let (code, v) = fkm_lab(&["structures", "f87u", "--format", "json"]);
    ensure(code == 0, format!("structures f87u exited {code}"))?;
    ensure(
        labels(&v["J_chamber"]) == ["2e1"],
        format!("f87u chamber {:?}", labels(&v["J_chamber"])),
    )?;
    ensure(
        v["N_C"] == 1 && v["N_H"] == 1,
        format!("f87u N_C={} N_H={}", v["N_C"], v["N_H"]),
    )
}

fn diagram_automorphisms() -> Check {
    let (_, tensor) = fkm_lab(&["structures", "f87", "--format", "json"]);
    let (_, double) = fkm_lab(&["structures", "f87u", "--format", "json"]);
    ensure(tensor["diagram"]["automorphism_order"] == 2, "tensor diagram order")?;
    ensure(double["diagram"]["automorphism_order"] == 1, "double-sum diagram order")?;
    let maps = tensor["diagram"]["induced_maps"]
        .as_array()
        .cloned()
        .unwrap_or_default();
    let swap: Vec<&str> = ["e1", "e2", "e3", "e4", "-e"].into();
    ensure(
        maps.iter().any(|m| {
            m.as_array()
                .is_some_and(|a| a.iter().map(|x| x.as_str().unwrap_or("")).eq(swap.iter().copied()))
        }),
        format!("induced maps {maps:?}"),
    )
}

fn cohomogeneity_superscripts() -> Check {
    for (group, expected) in [("spin9", 4), ("spin9so2", 3), ("so32", 1)] {
        let (code, v) = fkm_lab(&["cohomogeneity", "--group", group, "--format", "json"]);
        ensure(
            code == 0 && v["cohomogeneity"] == expected,
            format!("{group}: exit {code}, got {}", v["cohomogeneity"]),
        )?;
        ensure(v["seed"] == DEFAULT_SEED, "default seed not used")?;
    }
    Ok(())
}

fn centralizer_dimensions() -> Check {
    for (kp, km, expected) in [(0, 2, 1), (1, 1, 0)] {
        let sys = build_system::<Rational>(ModuleProfile::new(8, kp, km).unwrap()).unwrap();
        let dim = centralizer_basis(&sys).len();
        ensure(dim == expected, format!("(8,{kp},{km}): centralizer dim {dim}"))?;
    }
    Ok(())
}

fn preservation_witnesses() -> Check {
    for sys in table1_systems() {
        let g = sys.generators();
        let p0p1 = &g[0] * &g[1];
        ensure(
            preserves_foliation(&sys, &p0p1) == Ok(true),
            format!("P0P1 on m={}", sys.m()),
        )?;
        if sys.m() >= 2 {
            let q = standard_quaternionic(&sys).map_err(|e| e.to_string())?;
            let [a, b, c] = q.matrices();
            QuaternionicStructure::new(a.clone(), b.clone(), c.clone()).map_err(|e| e.to_string())?;
            for j in q.matrices() {
                ensure(
                    preserves_foliation(&sys, j) == Ok(true),
                    format!("quaternionic on m={}", sys.m()),
                )?;
            }
        }
    }
    Ok(())
}

fn census_reproduction() -> Check {
    let (code, v) = fkm_lab(&["census", "--format", "json"]);
    ensure(code == 0, format!("census exited {code}"))?;
    ensure(v["rows"].as_array().map(Vec::len) == Some(12), "expected 12 rows")?;
    ensure(
        v["diff"]["mismatches"].as_array().is_some_and(Vec::is_empty),
        format!("diff {}", v["diff"]),
    )?;
    for name in ["F_(8,7)", "F_u(8,7)"] {
        let check = v["consistency"]
            .as_array()
            .and_then(|a| a.iter().find(|c| c["row"] == name).cloned())
            .ok_or(format!("no consistency check for {name}"))?;
        ensure(
            check["agree"] == true && check["left"] == "weights_pipeline",
            format!("{name}: {check}"),
        )?;
    }
    Ok(())
}

fn signed_permutation(t: &RationalTorusElement, rng: &mut ChaCha8Rng) -> RationalTorusElement {
    let mut perm = [0usize, 1, 2, 3];
    perm.shuffle(rng);
    let spin = perm.map(|i| {
        if rng.random_bool(0.5) {
            -t.spin[i].clone()
        } else {
            t.spin[i].clone()
        }
    });
    RationalTorusElement::new(spin, t.center.clone())
}

fn property_suites() -> Check {
    for case in [WeightCase::Tensor, WeightCase::DoubleSum] {
        ensure(
            WeightSystem::<Rational>::new(case).closed_under_negation(),
            format!("{case:?} not closed under negation"),
        )?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for _ in 0..200 {
        let spin = [0; 4].map(|_| rng.random_range(-12i64..=12));
        let t = RationalTorusElement::from_i64(spin, Some(rng.random_range(-3i64..=3)));
        let r = chamber_reduce(&t);
        ensure(
            in_chamber(&r) && chamber_reduce(&r) == r,
            format!("not idempotent at {}", t.label()),
        )?;
        let w = signed_permutation(&t, &mut rng);
        ensure(chamber_reduce(&w) == r, format!("not Weyl invariant at {}", t.label()))?;
    }

    for p in sphere31_profiles() {
        let sys = build_system::<Rational>(p).map_err(|e| e.to_string())?;
        ensure(
            module_class_counts(&sys) == Ok(p),
            format!("round trip failed for {p:?}"),
        )?;
    }

    let spin9 = spin_basis(&build_system::<Rational>(ModuleProfile::new(8, 1, 1).unwrap()).unwrap());
    let spin9so2 = isotropy_basis(&build_system::<Rational>(ModuleProfile::new(8, 0, 2).unwrap()).unwrap()).all();
    let chain: Vec<usize> = [spin9, spin9so2, so_basis(32)]
        .iter()
        .map(|b| cohomogeneity(b, 32, 8, DEFAULT_SEED).map(|r| r.cohomogeneity))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    ensure(
        chain.windows(2).all(|w| w[0] >= w[1]),
        format!("cohomogeneity chain {chain:?}"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("Clifford validity of table and irreducible systems", clifford_validity),
        ("Muenzner identities at 100 seeded points", munzner_identities),
        ("structures f87 / f87u counts", theorem_counts),
        ("lowest weight diagram automorphisms", diagram_automorphisms),
        ("cohomogeneity 4, 3, 1", cohomogeneity_superscripts),
        ("centralizer dimensions 1 and 0", centralizer_dimensions),
        ("P0P1 and quaternionic preservation", preservation_witnesses),
        ("census with zero mismatches", census_reproduction),
        ("property suites", property_suites),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|p| Err(p.downcast_ref::<String>().cloned().unwrap_or_else(|| "panicked".into())));
        let elapsed = fmt_duration(start.elapsed());
        match result {
            Ok(()) => println!("criterion {}: PASS  {name} ({elapsed})", i + 1),
            Err(msg) => {
                failures += 1;
                println!("criterion {}: FAIL  {name} ({elapsed}): {msg}", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn fmt_duration(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}
