//! The verification commands.

use std::fmt;
use std::str::FromStr;

use germwork_core::algebra::{
    convolution, delta, f_iso, groupoid_span_check, indicator, semigroup_product, AlgebraElement, Basis, Ring, Scalar,
};
use germwork_core::category::{FiniteCategory, Slice, MAX_SLICES};
use germwork_core::constellation::{check_radiant, p_of, slice_constellation, t_of, Constellation};
use germwork_core::germs::{
    booleanization_extend, germ_category, iota_embedding, iota_ranges_are_projections, range_oplus, theta_embedding,
    theta_preserves_plus, underlying_matches_universal, universal_category, RestrictionAction,
};
use germwork_core::lattice::FinSemilattice;
use germwork_core::pmap::{full_pt, symmetric_inverse};
use germwork_core::proper::{
    check_germ_iso, decompose_proper, f_restriction_criterion, induced_conflict, partial_action_product, petrich_reilly,
};
use germwork_core::semigroup::MAX_EXHAUSTIVE;
use germwork_core::{Axioms, Error, Signature, UnarySemigroup, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::document::{Input, Object};
use crate::report::{from_verdict, info_verdict, Check, Inputs, Report};
use crate::{CliError, Options};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Check,
    Analyze,
    Germs,
    Booleanize,
    Esn,
    Decompose,
    AlgebraIso,
    Pr,
}

impl Command {
    pub const ALL: [Command; 8] = [
        Command::Check,
        Command::Analyze,
        Command::Germs,
        Command::Booleanize,
        Command::Esn,
        Command::Decompose,
        Command::AlgebraIso,
        Command::Pr,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Analyze => "analyze",
            Command::Germs => "germs",
            Command::Booleanize => "booleanize",
            Command::Esn => "esn",
            Command::Decompose => "decompose",
            Command::AlgebraIso => "algebra-iso",
            Command::Pr => "pr",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| CliError::Usage(format!("unknown command {s:?}")))
    }
}

type Checks = Vec<Check>;

/// Errors that mean the input lacks a property the command needs; they
/// become failing checks instead of aborting the run.
fn is_property_error(e: &Error) -> bool {
    matches!(
        e,
        Error::NotProper(..)
            | Error::NoLocalUnits(_)
            | Error::NotRestriction(_)
            | Error::NotRange(_)
            | Error::NotEUnitary(_)
            | Error::NotInductive(_)
            | Error::NotProperAction(_)
            | Error::P1Violation { .. }
            | Error::P2Violation { .. }
            | Error::InvalidAction(_)
            | Error::SignatureTooWeak(_)
            | Error::NotGroupoid(_)
            | Error::Internal(_)
    )
}

/// Runs `f`, turning a property error into a single failing check.
fn guarded(
    name: &str,
    namer: &dyn Fn(usize) -> String,
    f: impl FnOnce() -> Result<Checks, Error>,
) -> Result<Checks, CliError> {
    match f() {
        Ok(c) => Ok(c),
        Err(e) if is_property_error(&e) => {
            let mut c = Check::fail(name, e.to_string());
            match e {
                Error::NotProper(a, b) => c = c.with_witness(vec![namer(a), namer(b)]),
                Error::NoLocalUnits(a) => c = c.with_witness(vec![namer(a)]),
                _ => {}
            }
            Ok(vec![c])
        }
        Err(e) => Err(e.into()),
    }
}

fn labels_of(s: &UnarySemigroup, items: impl IntoIterator<Item = usize>) -> Value {
    Value::from(items.into_iter().map(|a| s.label(a)).collect::<Vec<_>>())
}

fn slice_limit(opts: &Options) -> usize {
    if opts.force {
        usize::MAX
    } else {
        MAX_SLICES
    }
}

pub fn run(command: Command, input: &Input, opts: &Options) -> Result<Report, CliError> {
    let object = &input.object;
    let incompatible = || CliError::IncompatibleKind {
        command: command.name(),
        kind: object.kind(),
    };
    let checks = match command {
        Command::Check => check(object, opts)?,
        Command::Analyze => analyze(object, opts)?,
        Command::Germs => on_semigroup(object, "germs", |s| germs(s, object))?.ok_or_else(incompatible)?,
        Command::Booleanize => booleanize(object, opts)?,
        Command::Esn => esn(object, opts)?,
        Command::Decompose => decompose(object)?,
        Command::AlgebraIso => algebra_iso(object, opts)?.ok_or_else(incompatible)?,
        Command::Pr => on_semigroup(object, "petrich-reilly", pr)?.ok_or_else(incompatible)?,
    };
    let inputs = Inputs {
        source: input.source.clone(),
        kind: object.kind().to_string(),
        name: input.name.clone(),
        ring: (command == Command::AlgebraIso).then(|| opts.ring.to_string()),
        seed: (command == Command::AlgebraIso).then_some(opts.seed),
        axioms: if command == Command::Check {
            opts.axioms.map(|a| a.to_string())
        } else {
            None
        },
    };
    Ok(Report::new(command.name(), inputs, checks))
}

/// The semigroup an object carries, if it carries one.
fn semigroup_of(object: &Object) -> Option<Result<UnarySemigroup, Error>> {
    match object {
        Object::Semigroup { semigroup, .. } => Some(Ok(semigroup.clone())),
        Object::Semilattice(e) => Some(e.as_semigroup()),
        Object::Action(a) => Some(Ok(a.semigroup.clone())),
        Object::PartialAction { action, family } => Some(partial_action_product(action, family).map(|p| p.semigroup)),
        Object::Constellation(q) => Some(t_of(q)),
        Object::Category(_) => None,
    }
}

fn on_semigroup(
    object: &Object,
    name: &str,
    f: impl FnOnce(&UnarySemigroup) -> Result<Checks, Error>,
) -> Result<Option<Checks>, CliError> {
    let Some(s) = semigroup_of(object) else {
        return Ok(None);
    };
    let plain = |i: usize| i.to_string();
    let s = match s {
        Ok(s) => s,
        Err(e) => return guarded(name, &plain, || Err(e)).map(Some),
    };
    let namer = |i: usize| s.label(i);
    guarded(name, &namer, || f(&s)).map(Some)
}

fn check(object: &Object, opts: &Options) -> Result<Checks, CliError> {
    let mut checks = Vec::new();
    match object {
        Object::Action(a) => {
            let s = &a.semigroup;
            checks.push(from_verdict("action laws", &a.check_action(), &|i| s.label(i)));
        }
        Object::PartialAction { action, family } => {
            let m = &action.monoid;
            checks.push(from_verdict("partial action laws", &action.check(), &|i| m.label(i)));
            checks.push(info_verdict(
                "family satisfies (P1) and (P2)",
                &action.proper_verdict(family),
                &|i| i.to_string(),
            ));
        }
        Object::Constellation(q) => {
            let name = |i: usize| constellation_label(q, i);
            checks.push(info_verdict("constellation laws", &q.check_constellation(), &name));
            checks.push(info_verdict("inductive", &q.check_inductive(), &name));
        }
        Object::Category(c) => {
            checks.push(from_verdict("category axioms", &c.axiom_violation().into(), &|i| {
                c.label(i).to_string()
            }));
            checks.push(Check::info("arrows", c.arrow_count()));
            checks.push(Check::info("objects", c.units().len()));
            checks.push(Check::info("groupoid", c.is_groupoid()));
            return Ok(checks);
        }
        _ => {}
    }
    checks.extend(on_semigroup(object, "semigroup", |s| axiom_checks(s, opts.axioms))?.unwrap_or_default());
    Ok(checks)
}

fn constellation_label(q: &Constellation, i: usize) -> String {
    q.labels().map_or_else(|| i.to_string(), |l| l[i].clone())
}

fn axiom_checks(s: &UnarySemigroup, only: Option<Axioms>) -> Result<Checks, Error> {
    let namer = |i: usize| s.label(i);
    let families: Vec<Axioms> = only.map_or_else(|| Axioms::ALL.to_vec(), |a| vec![a]);
    let verdicts: Vec<(Axioms, Result<Verdict, Error>)> =
        families.par_iter().map(|&a| (a, s.check_axioms(a))).collect();
    let mut checks = vec![Check::info("size", s.size())];
    for (a, verdict) in verdicts {
        let name = format!("axioms {a}");
        checks.push(match (verdict, only.is_some()) {
            (Ok(v), true) => from_verdict(&name, &v, &namer),
            (Ok(v), false) => info_verdict(&name, &v, &namer),
            (Err(Error::SignatureTooWeak(w)), true) => Check::fail(name, format!("signature too weak for {w}")),
            (Err(Error::SignatureTooWeak(_)), false) => {
                Check::info(name, Value::Null).with_detail("signature lacks an operation")
            }
            (Err(e), _) => return Err(e),
        });
    }
    if s.signature() >= Signature::Star {
        checks.push(Check::info("projections", labels_of(s, s.projections())));
    }
    Ok(checks)
}

fn analyze(object: &Object, opts: &Options) -> Result<Checks, CliError> {
    if let Object::Semilattice(e) = object {
        return Ok(semilattice_checks(e, "")?);
    }
    let Some(checks) = on_semigroup(object, "analysis", |s| {
        let mut checks = Vec::new();
        let namer = |i: usize| s.label(i);
        if let Some(inv) = s.inverse_table() {
            checks.push(Check::info("inverse", true).with_value(json!({
                "inverse": true,
                "inverses": labels_of(s, inv),
            })));
        } else {
            checks.push(Check::info("inverse", false));
        }
        if s.signature() < Signature::Star {
            return Ok(checks);
        }
        s.require_restriction()?;
        let order = s.natural_order()?;
        s.verify_order_properties(&order)?;
        checks.push(Check::pass("natural order is a partial order"));
        checks.push(Check::info(
            "natural order",
            Value::from(
                order
                    .pairs()
                    .into_iter()
                    .filter(|(a, b)| a != b)
                    .map(|(a, b)| vec![s.label(a), s.label(b)])
                    .collect::<Vec<_>>(),
            ),
        ));
        let sigma = s.sigma_checked()?;
        checks.push(Check::pass("sigma by closure equals sigma by compatibility"));
        let mut classes = sigma.classes();
        classes.sort_unstable();
        classes.dedup();
        checks.push(Check::info("sigma classes", classes.len()));
        let improper = s.first_improper_pair()?;
        let proper = Check::info("proper", improper.is_none());
        checks.push(match improper {
            Some((a, b)) => proper.with_witness(vec![namer(a), namer(b)]),
            None => proper,
        });
        if improper.is_none() {
            checks.push(Check::info("f-restriction", s.is_f_restriction()?));
        }
        match s.first_without_local_unit() {
            Some(a) => checks.push(Check::info("local units", false).with_witness(vec![namer(a)])),
            None => checks.push(Check::info("local units", true)),
        }
        match s.check_boolean_restriction() {
            Ok(v) => checks.push(info_verdict("boolean restriction", &v, &namer)),
            Err(Error::NoRestrictionZero) => {
                checks.push(Check::info("boolean restriction", false).with_detail("no zero projection"))
            }
            Err(e) => return Err(e),
        }
        let (e, _) = FinSemilattice::of_projections(s)?;
        checks.extend(semilattice_checks(&e, "projections: ")?);
        Ok(checks)
    })?
    else {
        return Err(CliError::IncompatibleKind {
            command: "analyze",
            kind: object.kind(),
        });
    };
    let _ = opts;
    Ok(checks)
}

/// Filters, the generated Boolean algebra and the ideal correspondence.
fn semilattice_checks(e: &FinSemilattice, prefix: &str) -> Result<Checks, Error> {
    let name = |s: &str| format!("{prefix}{s}");
    let n = e.size();
    let mut checks = vec![Check::info(name("size"), n)];
    let filters = e.filters_exhaustive()?;
    checks.push(Check::holds(name("filter count equals size"), filters.len() == n).with_value(filters.len()));
    let principal = filters.iter().all(|f| e.filter_generator(f).is_some()) && e.filters()?.len() == n;
    checks.push(Check::holds(name("filters are principal"), principal));
    if n <= germwork_core::lattice::MAX_BOOLEANIZE {
        let b = e.booleanization()?;
        checks.push(
            Check::holds(
                name("generated boolean algebra is the powerset"),
                b.family.len() == 1 << n,
            )
            .with_value(b.family.len()),
        );
    } else {
        checks.push(
            Check::info(name("generated boolean algebra is the powerset"), Value::Null)
                .with_detail("skipped above 12 elements"),
        );
    }
    let ideals = e.all_order_ideals()?;
    let mut round_trips = true;
    for ideal in &ideals {
        let u = e.order_ideal_psi_inv(ideal)?;
        round_trips &= e.order_ideal_psi(&u)?.members == ideal.members;
        round_trips &= e.order_ideal_psi_inv(&e.order_ideal_psi(&u)?)? == u;
    }
    round_trips &= (0..n).all(|p| {
        e.order_ideal_psi(&e.d(p))
            .map(|i| i.members == e.principal_ideal(p).members)
            .unwrap_or(false)
    });
    checks.push(Check::holds(name("ideal correspondence round trips"), round_trips).with_value(ideals.len()));
    Ok(checks)
}

fn germs(s: &UnarySemigroup, object: &Object) -> Result<Checks, Error> {
    let namer = |i: usize| s.label(i);
    let base = s.drop_plus();
    let u = universal_category(&base)?;
    let c = u.category();
    let mut checks = vec![Check::holds("arrow count equals size", c.arrow_count() == s.size())
        .with_value(json!([s.size(), c.arrow_count()]))];
    let germ_of: Vec<Option<usize>> = s
        .elements()
        .map(|a| u.spectral.point_of(s.star(a)).and_then(|x| u.germs.arrow(a, x)))
        .collect();
    let mut hit = vec![false; c.arrow_count()];
    let bijective = germ_of.len() == c.arrow_count()
        && germ_of
            .iter()
            .all(|g| g.is_some_and(|x| !std::mem::replace(&mut hit[x], true)));
    checks.push(Check::holds("germ at the domain point is a bijection", bijective));
    let emb = iota_embedding(&u)?;
    checks.push(Check::holds("iota is injective", emb.injective));
    checks.push(from_verdict("iota is multiplicative", &emb.morphism, &namer));
    checks.push(Check::info(
        "ranges of iota are projections",
        iota_ranges_are_projections(&u),
    ));
    let oplus = range_oplus(&base)?;
    checks.push(Check::info("oplus", labels_of(s, oplus.table.iter().copied())));
    checks.push(info_verdict("oplus satisfies the range axioms", &oplus.verdict, &namer));
    if s.signature() == Signature::StarPlus {
        if let Verdict::Fail(v) = s.check_axioms(Axioms::Range)? {
            checks.push(
                Check::info("theta preserves plus", Value::Null)
                    .with_detail(format!("not a range semigroup: {}", v.law)),
            );
        } else {
            let maps = match object {
                Object::Semigroup { maps: Some(m), .. } => Some(m.clone()),
                _ => None,
            };
            let action = match maps {
                Some(m) => RestrictionAction::tautological(s.clone(), m)?,
                None => RestrictionAction::new(s.clone(), u.spectral.action.space, u.spectral.action.theta.clone())?,
            };
            let gc = germ_category(&action)?;
            let emb = theta_embedding(&action, &gc)?;
            checks.push(from_verdict(
                "theta preserves plus",
                &theta_preserves_plus(&action, &emb, &gc)?,
                &namer,
            ));
            checks.push(from_verdict(
                "underlying category is the universal category",
                &underlying_matches_universal(s)?,
                &namer,
            ));
        }
    }
    Ok(checks)
}

fn booleanize(object: &Object, opts: &Options) -> Result<Checks, CliError> {
    let limit = slice_limit(opts);
    match object {
        Object::Category(c) => Ok(category_slices(c, limit)?),
        Object::Semilattice(e) => {
            let b = e.booleanization()?;
            Ok(vec![Check::holds(
                "generated boolean algebra is the powerset",
                b.family.len() == 1 << e.size(),
            )
            .with_value(b.family.len())])
        }
        _ => on_semigroup(object, "booleanization", |s| {
            let s = &s.drop_plus();
            let u = universal_category(s)?;
            let c = u.category();
            let iota: Vec<Slice> = s.elements().map(|a| u.iota(a)).collect();
            let ext = booleanization_extend(s, c, &iota, limit)?;
            let b = &ext.booleanization;
            b.verify_boolean()?;
            let identity = b.slices.iter().zip(&ext.psi).all(|(w, p)| w == p);
            Ok(vec![
                Check::info("slices", b.slices.len()),
                Check::pass("slices form a boolean restriction semigroup"),
                Check::holds("iota extends to the identity of the booleanization", identity),
                Check::holds(
                    "iota lands in the booleanization",
                    s.elements().all(|a| b.index_of(&iota[a]).is_some()),
                ),
            ])
        })?
        .ok_or(CliError::IncompatibleKind {
            command: "booleanize",
            kind: object.kind(),
        }),
    }
}

/// Objects if every hom-set has exactly one arrow.
fn pair_groupoid_objects(c: &FiniteCategory) -> Option<usize> {
    let units = c.units();
    let n = units.len();
    let mut seen = std::collections::HashSet::new();
    let unique = (0..c.arrow_count()).all(|x| seen.insert((c.dom(x), c.ran(x))));
    (c.is_groupoid() && unique && c.arrow_count() == n * n).then_some(n)
}

fn category_slices(c: &FiniteCategory, limit: usize) -> Result<Checks, Error> {
    let slices = c.slice_semigroup(limit)?;
    let bislices = c.bislice_semigroup(limit)?;
    let mut checks = vec![
        Check::info("slices", slices.slices.len()),
        Check::info("bislices", bislices.slices.len()),
    ];
    checks.push(match slices.verify_boolean() {
        Ok(()) => Check::pass("slices form a boolean restriction semigroup"),
        Err(e) => Check::fail("slices form a boolean restriction semigroup", e.to_string()),
    });
    checks.push(Check::holds(
        "bislices form an inverse semigroup",
        bislices.semigroup.inverse_table().is_some(),
    ));
    if let Some(n) = pair_groupoid_objects(c).filter(|&n| n <= germwork_core::catalog::MAX_MAP_POINTS) {
        let pt = full_pt(n)?.0;
        let is = symmetric_inverse(n)?.0;
        checks.push(Check::holds(
            "slices are isomorphic to the partial maps",
            slices.semigroup.find_isomorphism(&pt).is_some(),
        ));
        let bis = bislices.semigroup.drop_plus();
        checks.push(Check::holds(
            "bislices are isomorphic to the partial bijections",
            bis.find_isomorphism(&is.drop_plus()).is_some(),
        ));
    }
    Ok(checks)
}

fn esn(object: &Object, opts: &Options) -> Result<Checks, CliError> {
    if let Object::Constellation(q) = object {
        let name = |i: usize| constellation_label(q, i);
        let mut checks = vec![
            from_verdict("constellation laws", &q.check_constellation(), &name),
            from_verdict("inductive", &q.check_inductive(), &name),
        ];
        checks.extend(guarded("round trip", &name, || {
            let t = t_of(q)?;
            Ok(vec![Check::holds("P(T(Q)) = Q", p_of(&t)?.same_tables(q))])
        })?);
        return Ok(checks);
    }
    let limit = slice_limit(opts);
    on_semigroup(object, "esn", |s| {
        let s = &s.drop_plus();
        let q = p_of(s)?;
        let t = t_of(&q)?;
        let mut checks = vec![
            from_verdict("P(S) is inductive", &q.check_inductive(), &|i| s.label(i)),
            Check::holds(
                "T(P(S)) = S",
                t.mul_rows() == s.mul_rows() && t.star_table() == s.star_table(),
            ),
            Check::holds("P(T(P(S))) = P(S)", p_of(&t)?.same_tables(&q)),
        ];
        if s.has_local_units() {
            let u = universal_category(s)?;
            let c = u.category();
            let image: Vec<Slice> = s.elements().map(|a| u.iota(a)).collect();
            let ic = slice_constellation(c, image.clone())?;
            checks.push(from_verdict("image constellation clauses", &ic.clauses, &|i| {
                s.label(i)
            }));
            let rho: Vec<usize> = s.elements().collect();
            let onto_image = check_radiant(&rho, &q, &ic.constellation)?;
            checks.push(Check::holds(
                "P(iota) is an isomorphism onto its image",
                onto_image.isomorphism,
            ));
            let count = c.slice_count().unwrap_or(usize::MAX);
            if count > limit.min(MAX_EXHAUSTIVE) {
                checks.push(
                    Check::info("slice constellation clauses", Value::Null)
                        .with_detail(format!("{count} slices, above the table limit {MAX_EXHAUSTIVE}")),
                );
                return Ok(checks);
            }
            let sc = slice_constellation(c, c.enumerate_slices(limit)?)?;
            checks.push(from_verdict("slice constellation clauses", &sc.clauses, &|i| {
                sc.semigroup.semigroup.label(i)
            }));
            let into_all: Vec<usize> = image
                .iter()
                .map(|w| sc.semigroup.index_of(w).expect("iota is a slice"))
                .collect();
            let r = check_radiant(&into_all, &q, &sc.constellation)?;
            let c = Check::holds("P(iota) is radiant", r.radiant);
            checks.push(match &r.failure {
                Some(v) if !r.radiant => c.with_detail(v.law.clone()),
                _ => c,
            });
        }
        Ok(checks)
    })?
    .ok_or(CliError::IncompatibleKind {
        command: "esn",
        kind: object.kind(),
    })
}

fn decompose(object: &Object) -> Result<Checks, CliError> {
    let mut checks = Vec::new();
    match object {
        Object::PartialAction { action, family } => {
            let m = &action.monoid;
            checks.push(from_verdict("partial action laws", &action.check(), &|i| m.label(i)));
            checks.extend(guarded("(P1) and (P2)", &|i| m.label(i), || {
                action.check_proper(family)?;
                let p = partial_action_product(action, family)?;
                Ok(vec![
                    Check::pass("(P1) and (P2)"),
                    from_verdict("product clauses", &p.clauses, &|i| p.semigroup.label(i)),
                    Check::info("product size", p.semigroup.size()),
                ])
            })?);
        }
        Object::Action(a) => {
            let s = &a.semigroup;
            let namer = |i: usize| s.label(i);
            checks.extend(guarded("induced action", &namer, || {
                let conflict = induced_conflict(a)?;
                let mut out = vec![from_verdict("induced action is well defined", &conflict.into(), &namer)];
                if s.is_proper()? {
                    let g = check_germ_iso(a)?;
                    out.push(Check::pass("germs match the transformation category").with_value(g.map.len()));
                }
                Ok(out)
            })?);
            return Ok(checks);
        }
        Object::Category(_) => {
            return Err(CliError::IncompatibleKind {
                command: "decompose",
                kind: object.kind(),
            })
        }
        _ => {}
    }
    if checks.iter().any(|c| c.status == crate::Status::Fail) {
        return Ok(checks);
    }
    checks.extend(
        on_semigroup(object, "decomposition", |s| {
            let namer = |i: usize| s.label(i);
            let d = decompose_proper(s)?;
            let p = &d.product;
            let g = check_germ_iso(&d.spectral.action)?;
            Ok(vec![
                from_verdict("product clauses", &p.clauses, &|i| p.semigroup.label(i)),
                Check::pass("S is isomorphic to the partial action product").with_value(Value::from(
                    d.psi.iter().map(|&i| p.semigroup.label(i)).collect::<Vec<_>>(),
                )),
                Check::pass("germs match the transformation category").with_value(g.map.len()),
                Check::info("sigma classes", d.induced.action.monoid.size()),
                Check::info("f-restriction", f_restriction_criterion(s)?),
                Check::info(
                    "surjectivity witness",
                    Value::from(d.surjectivity_witness.iter().map(|&i| namer(i)).collect::<Vec<_>>()),
                ),
            ])
        })?
        .unwrap_or_default(),
    );
    Ok(checks)
}

fn pr(s: &UnarySemigroup) -> Result<Checks, Error> {
    let r = petrich_reilly(s)?;
    Ok(vec![
        Check::pass("s -> ([s], s*) is an isomorphism").with_value(labels_of(&r.product, r.to_product.iter().copied())),
        Check::pass("gamma is an isomorphism"),
        Check::pass("beta(D_e) = D_psi(e)"),
        Check::info("product size", r.product.size()),
    ])
}

fn algebra_iso(object: &Object, opts: &Options) -> Result<Option<Checks>, CliError> {
    if let Object::Category(c) = object {
        let mut checks = convolution_rounds(c, opts)?;
        if c.is_groupoid() {
            let sc = groupoid_span_check(c, slice_limit(opts))?;
            checks.push(
                Check::holds("slice and bislice spans agree", sc.spans_equal())
                    .with_value(json!({"slices": sc.slices, "bislices": sc.bislices, "slice_rank": sc.slice_rank, "bislice_rank": sc.bislice_rank})),
            );
        }
        return Ok(Some(checks));
    }
    on_semigroup(object, "algebra isomorphism", |s| {
        let namer = |i: usize| s.label(i);
        let f = f_iso(s, opts.ring)?;
        let n = f.semigroup_dimension;
        let mut checks = vec![
            from_verdict("F is multiplicative", &f.multiplicative, &namer),
            from_verdict("F(s) expands over the elements below s", &f.expansion, &namer),
            Check::holds("change of basis is unitriangular", f.unitriangular),
            Check::holds("dimensions agree", n == f.category_dimension).with_value(json!([n, f.category_dimension])),
            Check::info("basis order", labels_of(s, f.order.iter().copied())),
            Check::info("matrix", matrix_json(&f.matrix)),
            Check::info("inverse matrix", matrix_json(&f.inverse)),
        ];
        let rounds = semigroup_rounds(s, opts)?;
        checks.push(Check::holds("semigroup algebra is associative", rounds).with_value(opts.rounds));
        checks.extend(convolution_rounds(f.universal.category(), opts)?);
        Ok(checks)
    })
}

/// Dense rows for small matrices, `[row, column, value]` triplets otherwise.
fn matrix_json(m: &[Vec<Scalar>]) -> Value {
    if m.len() <= 64 {
        Value::from(
            m.iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        )
    } else {
        let mut out = Vec::new();
        for (i, r) in m.iter().enumerate() {
            for (j, v) in r.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                out.push(json!([i, j, v.to_string()]));
            }
        }
        Value::from(out)
    }
}

fn round_rng(opts: &Options, stream: u64, round: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    rng.set_stream(stream);
    rng.set_word_pos(round as u128 * 1024);
    rng
}

/// A uniformly chosen arrow or nothing over each object.
pub fn random_slice(c: &FiniteCategory, rng: &mut impl Rng) -> Slice {
    let mut picks = Vec::new();
    for u in c.units() {
        let out: Vec<usize> = (0..c.arrow_count()).filter(|&x| c.dom(x) == u).collect();
        let k = rng.gen_range(0..=out.len());
        if k < out.len() {
            picks.push(out[k]);
        }
    }
    c.set_of(picks)
}

fn random_element(ring: Ring, basis: Basis, rng: &mut impl Rng) -> Result<AlgebraElement, Error> {
    let n = basis.dimension();
    let terms: Vec<(usize, Scalar)> = (0..rng.gen_range(1..=n.min(4)))
        .map(|_| (rng.gen_range(0..n), ring.from_i64(rng.gen_range(-3..=3))))
        .collect();
    AlgebraElement::from_terms(ring, basis, terms)
}

/// `Σ_{uvw = x} f(u) g(v) h(w)`.
pub fn triple_convolution(
    c: &FiniteCategory,
    f: &AlgebraElement,
    g: &AlgebraElement,
    h: &AlgebraElement,
) -> Result<AlgebraElement, Error> {
    let mut out = AlgebraElement::zero(f.ring(), f.basis());
    for (u, a) in f.terms() {
        for (v, b) in g.terms() {
            let Some(uv) = c.compose(u, v) else { continue };
            for (w, d) in h.terms() {
                if let Some(x) = c.compose(uv, w) {
                    out.add_term(x, a.mul(b)?.mul(d)?)?;
                }
            }
        }
    }
    Ok(out)
}

fn semigroup_rounds(s: &UnarySemigroup, opts: &Options) -> Result<bool, Error> {
    let basis = Basis::Semigroup(s.size());
    let results: Vec<Result<bool, Error>> = (0..opts.rounds)
        .into_par_iter()
        .map(|r| {
            let mut rng = round_rng(opts, 1, r);
            let (a, b, c) = (
                random_element(opts.ring, basis, &mut rng)?,
                random_element(opts.ring, basis, &mut rng)?,
                random_element(opts.ring, basis, &mut rng)?,
            );
            let left = semigroup_product(s, &semigroup_product(s, &a, &b)?, &c)?;
            let right = semigroup_product(s, &a, &semigroup_product(s, &b, &c)?)?;
            Ok(left == right)
        })
        .collect();
    results.into_iter().try_fold(true, |acc, r| Ok(acc && r?))
}

fn convolution_rounds(c: &FiniteCategory, opts: &Options) -> Result<Checks, Error> {
    let ring = opts.ring;
    let basis = Basis::Arrows(c.arrow_count());
    let indicator_rounds: Vec<Result<Option<usize>, Error>> = (0..opts.rounds)
        .into_par_iter()
        .map(|r| {
            let mut rng = round_rng(opts, 2, r);
            let (u, v) = (random_slice(c, &mut rng), random_slice(c, &mut rng));
            let lhs = convolution(c, &indicator(c, ring, &u)?, &indicator(c, ring, &v)?)?;
            Ok((lhs != indicator(c, ring, &c.slice_product(&u, &v)?)?).then_some(r))
        })
        .collect();
    let assoc_rounds: Vec<Result<Option<usize>, Error>> = (0..opts.rounds)
        .into_par_iter()
        .map(|r| {
            let mut rng = round_rng(opts, 3, r);
            let f = random_element(ring, basis, &mut rng)?;
            let g = random_element(ring, basis, &mut rng)?;
            let h = random_element(ring, basis, &mut rng)?;
            let oracle = triple_convolution(c, &f, &g, &h)?;
            let left = convolution(c, &convolution(c, &f, &g)?, &h)?;
            let right = convolution(c, &f, &convolution(c, &g, &h)?)?;
            Ok((left != oracle || right != oracle).then_some(r))
        })
        .collect();
    let first_failure = |rs: Vec<Result<Option<usize>, Error>>| -> Result<Option<usize>, Error> {
        for r in rs {
            if let Some(round) = r? {
                return Ok(Some(round));
            }
        }
        Ok(None)
    };
    let units_ok = c.units().iter().all(|&x| {
        convolution(c, &delta(c, ring, x).unwrap(), &delta(c, ring, x).unwrap()).ok() == delta(c, ring, x).ok()
    });
    let mut checks = Vec::new();
    for (name, rounds) in [
        ("indicator of a product of slices", first_failure(indicator_rounds)?),
        ("convolution is associative", first_failure(assoc_rounds)?),
    ] {
        checks.push(match rounds {
            None => Check::pass(name).with_value(opts.rounds),
            Some(r) => Check::fail(name, format!("round {r}")),
        });
    }
    checks.push(Check::holds("unit deltas are idempotent", units_ok));
    Ok(checks)
}
