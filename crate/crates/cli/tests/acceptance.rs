//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::Command as Process;
use std::time::{Duration, Instant};

use germwork::{load, run, Command, Options, Report, Status};
use germwork_core::algebra::{f_iso, Ring};
use germwork_core::catalog::{catalog, CatalogEntry, SEMIGROUP_SWEEP};
use germwork_core::constellation::{p_of, t_of};
use germwork_core::germs::range_oplus;
use germwork_core::proper::{decompose_proper, partial_action_product};
use germwork_core::{Axioms, Error, Verdict};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn report(command: Command, source: &str, opts: &Options) -> Result<Report, String> {
    let input = load(source, false).map_err(|e| format!("{source}: {e}"))?;
    run(command, &input, opts).map_err(|e| format!("{command} {source}: {e}"))
}

fn status(r: &Report, check: &str) -> Result<Status, String> {
    r.check(check)
        .map(|c| c.status)
        .ok_or_else(|| format!("{} {}: no check {check:?}", r.command, r.inputs.source))
}

fn expect(r: &Report, check: &str, want: Status) -> Outcome {
    let got = status(r, check)?;
    ensure(got == want, || {
        format!("{} {}: {check} is {got:?}", r.command, r.inputs.source)
    })
}

fn within(start: Instant, limit_secs: u64) -> Outcome {
    let t = start.elapsed();
    ensure(t < Duration::from_secs(limit_secs), || {
        format!("took {t:?}, limit {limit_secs} s")
    })
}

/// Sweep entries whose semigroup has local units.
fn local_unit_sweep() -> Vec<&'static str> {
    SEMIGROUP_SWEEP
        .iter()
        .copied()
        .filter(|n| catalog(n).unwrap().semigroup().unwrap().has_local_units())
        .collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let cases: &[(&str, &[(Axioms, bool)])] = &[
        (
            "pt:2",
            &[
                (Axioms::Restriction, true),
                (Axioms::Range, true),
                (Axioms::Corestriction, false),
            ],
        ),
        (
            "pt:3",
            &[
                (Axioms::Restriction, true),
                (Axioms::Range, true),
                (Axioms::Corestriction, false),
            ],
        ),
        ("i:2", &[(Axioms::Inverse, true)]),
        ("i:3", &[(Axioms::Inverse, true)]),
        (
            "r:2",
            &[
                (Axioms::BiEhresmann, true),
                (Axioms::Restriction, false),
                (Axioms::Corestriction, false),
            ],
        ),
    ];
    for (name, families) in cases {
        for &(axioms, holds) in *families {
            let opts = Options {
                axioms: Some(axioms),
                ..Options::default()
            };
            let r = report(Command::Check, &format!("catalog:{name}"), &opts)?;
            let c = r.check(&format!("axioms {axioms}")).ok_or("missing check")?;
            ensure(c.status == if holds { Status::Pass } else { Status::Fail }, || {
                format!("{name} {axioms}: {:?}", c.status)
            })?;
            ensure(holds || c.witness.is_some(), || {
                format!("{name} {axioms}: failure without witness")
            })?;
        }
    }
    within(start, 5)
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    for name in local_unit_sweep() {
        let r = report(Command::Germs, &format!("catalog:{name}"), &Options::default())?;
        expect(&r, "arrow count equals size", Status::Pass)?;
        expect(&r, "germ at the domain point is a bijection", Status::Pass)?;
    }
    within(start, 5)
}

fn criterion_3() -> Outcome {
    let mut range_inputs = 0;
    for name in local_unit_sweep() {
        let r = report(Command::Germs, &format!("catalog:{name}"), &Options::default())?;
        expect(&r, "iota is injective", Status::Pass)?;
        expect(&r, "iota is multiplicative", Status::Pass)?;
        let s = catalog(name).unwrap().semigroup().unwrap();
        if s.plus_table().is_some() && s.check_axioms(Axioms::Range).unwrap().is_pass() {
            expect(&r, "theta preserves plus", Status::Pass)?;
            range_inputs += 1;
        }
    }
    ensure(range_inputs >= 4, || format!("only {range_inputs} range inputs"))
}

fn criterion_4() -> Outcome {
    let s = catalog("paper-4").unwrap().semigroup().unwrap();
    let id = |l: &str| s.index_of_label(l).unwrap();
    let (empty, f, g, one) = (id("∅"), id("f"), id("g"), id("1"));
    let oplus = range_oplus(&s).map_err(|e| e.to_string())?;
    ensure(oplus.table == vec![empty, f, one, one], || {
        format!("oplus table {:?}", oplus.table)
    })?;
    let fg = s.mul(f, g);
    ensure(oplus.table[fg] == empty, || "(fg)⊕ is not ∅".into())?;
    ensure(oplus.table[s.mul(f, oplus.table[g])] == f, || "(f g⊕)⊕ is not f".into())?;
    ensure(!oplus.verdict.is_pass(), || {
        "⊕-extension satisfies the range axioms".into()
    })?;
    let r = report(Command::Germs, "catalog:paper-4", &Options::default())?;
    let c = r.check("oplus satisfies the range axioms").ok_or("missing check")?;
    ensure(c.value == Some(false.into()), || {
        "report does not record the failure".into()
    })
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    for name in SEMIGROUP_SWEEP.iter().copied().chain(["no-local-units"]) {
        let s = catalog(name).unwrap().semigroup().unwrap().drop_plus();
        let q = p_of(&s).map_err(|e| format!("{name}: {e}"))?;
        let t = t_of(&q).map_err(|e| format!("{name}: {e}"))?;
        ensure(t.mul_rows() == s.mul_rows() && t.star_table() == s.star_table(), || {
            format!("{name}: T(P(S)) differs from S")
        })?;
        let back = p_of(&t).map_err(|e| e.to_string())?;
        ensure(back.same_tables(&q), || format!("{name}: P(T(Q)) differs from Q"))?;
        let r = report(Command::Esn, &format!("catalog:{name}"), &Options::default())?;
        ensure(r.passed(), || format!("{name}: esn report fails"))?;
        if s.has_local_units() {
            expect(&r, "image constellation clauses", Status::Pass)?;
            let sc = status(&r, "slice constellation clauses")?;
            ensure(sc != Status::Fail, || {
                format!("{name}: slice constellation clauses fail")
            })?;
        }
    }
    let r = report(Command::Esn, "catalog:paper-4", &Options::default())?;
    expect(&r, "slice constellation clauses", Status::Pass)?;
    expect(&r, "P(iota) is radiant", Status::Pass)?;
    within(start, 30)
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let r = report(Command::Booleanize, "catalog:pair-groupoid:2", &Options::default())?;
    ensure(
        r.check("slices").and_then(|c| c.value.clone()) == Some(9.into()),
        || "slice count".into(),
    )?;
    ensure(
        r.check("bislices").and_then(|c| c.value.clone()) == Some(7.into()),
        || "bislice count".into(),
    )?;
    expect(&r, "slices are isomorphic to the partial maps", Status::Pass)?;
    expect(&r, "bislices are isomorphic to the partial bijections", Status::Pass)?;
    expect(&r, "slices form a boolean restriction semigroup", Status::Pass)?;
    within(start, 1)
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut proper = 0;
    for name in local_unit_sweep() {
        let s = catalog(name).unwrap().semigroup().unwrap();
        let r = report(Command::Decompose, &format!("catalog:{name}"), &Options::default())?;
        if s.is_proper().unwrap() {
            proper += 1;
            expect(&r, "product clauses", Status::Pass)?;
            expect(&r, "S is isomorphic to the partial action product", Status::Pass)?;
            expect(&r, "germs match the transformation category", Status::Pass)?;
        } else {
            ensure(!r.passed(), || format!("{name}: improper input decomposed"))?;
        }
    }
    ensure(proper >= 5, || format!("only {proper} proper entries"))?;
    let CatalogEntry::PartialAction { action, family } = catalog("swap-diamond").unwrap() else {
        return Err("swap-diamond is not a partial action".into());
    };
    let p = partial_action_product(&action, &family).map_err(|e| e.to_string())?;
    ensure(p.clauses.is_pass(), || format!("swap-diamond clauses {:?}", p.clauses))?;
    let i2 = catalog("i:2").unwrap().semigroup().unwrap();
    ensure(matches!(decompose_proper(&i2), Err(Error::NotProper(..))), || {
        "i:2 is not rejected".into()
    })?;
    within(start, 30)
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut e_unitary = 0;
    for name in local_unit_sweep() {
        let s = catalog(name).unwrap().semigroup().unwrap();
        if s.inverse_table().is_none() || !s.is_proper().unwrap() {
            continue;
        }
        e_unitary += 1;
        let r = report(Command::Pr, &format!("catalog:{name}"), &Options::default())?;
        expect(&r, "s -> ([s], s*) is an isomorphism", Status::Pass)?;
        expect(&r, "gamma is an isomorphism", Status::Pass)?;
        expect(&r, "beta(D_e) = D_psi(e)", Status::Pass)?;
    }
    ensure(e_unitary >= 3, || format!("only {e_unitary} E-unitary entries"))?;
    within(start, 10)
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    for name in local_unit_sweep() {
        let s = catalog(name).unwrap().semigroup().unwrap();
        for ring in [Ring::Q, Ring::Z, Ring::Zp(2)] {
            let f = f_iso(&s, ring).map_err(|e| format!("{name} {ring}: {e}"))?;
            ensure(f.multiplicative == Verdict::Pass, || {
                format!("{name} {ring}: not multiplicative")
            })?;
            ensure(f.unitriangular, || format!("{name} {ring}: not unitriangular"))?;
            ensure(
                f.semigroup_dimension == s.size() && f.category_dimension == s.size(),
                || format!("{name} {ring}: dimensions"),
            )?;
        }
    }
    within(start, 10)
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let categories = local_unit_sweep()
        .into_iter()
        .map(String::from)
        .chain((1..=3).map(|n| format!("pair-groupoid:{n}")));
    for name in categories {
        let r = report(Command::AlgebraIso, &format!("catalog:{name}"), &Options::default())?;
        expect(&r, "indicator of a product of slices", Status::Pass)?;
        expect(&r, "convolution is associative", Status::Pass)?;
    }
    within(start, 10)
}

fn criterion_11() -> Outcome {
    let start = Instant::now();
    let names = (1..=6)
        .map(|k| format!("chain:{k}"))
        .chain((1..=5).map(|k| format!("antichain:{k}")))
        .chain((1..=2).map(|k| format!("free:{k}")));
    for name in names {
        let r = report(Command::Analyze, &format!("catalog:{name}"), &Options::default())?;
        let size = r
            .check("size")
            .and_then(|c| c.value.as_ref())
            .and_then(|v| v.as_u64())
            .unwrap();
        ensure(size <= 6, || format!("{name} has {size} elements"))?;
        for check in [
            "filter count equals size",
            "filters are principal",
            "generated boolean algebra is the powerset",
            "ideal correspondence round trips",
        ] {
            expect(&r, check, Status::Pass)?;
        }
    }
    within(start, 5)
}

fn criterion_12() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_germwork");
    let inputs = [
        "paper-4",
        "pt:2",
        "i:2",
        "swap-diamond",
        "mcalister:3:2",
        "free:2",
        "pair-groupoid:2",
    ];
    let commands = [
        "check",
        "analyze",
        "germs",
        "booleanize",
        "esn",
        "decompose",
        "algebra-iso",
        "pr",
    ];
    for name in inputs {
        for command in commands {
            let source = format!("catalog:{name}");
            let runs: Vec<Vec<u8>> = ["1", "8", "8"]
                .iter()
                .map(|t| {
                    Process::new(bin)
                        .args([command, &source, "--threads", t])
                        .output()
                        .expect("binary runs")
                        .stdout
                })
                .collect();
            ensure(runs[0] == runs[1] && runs[1] == runs[2], || {
                format!("{command} {source} differs")
            })?;
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("axiom suites classify the catalog", criterion_1),
        ("universal category has one arrow per element", criterion_2),
        ("iota embeds and theta preserves plus", criterion_3),
        ("oplus counterexample on paper-4", criterion_4),
        ("constellation round trips", criterion_5),
        ("pair groupoid slices and bislices", criterion_6),
        ("proper decomposition", criterion_7),
        ("e-unitary partial action products", criterion_8),
        ("algebra isomorphism over three rings", criterion_9),
        ("convolution laws", criterion_10),
        ("semilattice layer", criterion_11),
        ("deterministic reports", criterion_12),
    ];
    let mut failed = 0;
    for (i, (name, criterion)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = criterion();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2} pass  {name} ({secs:.2} s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.2} s): {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
