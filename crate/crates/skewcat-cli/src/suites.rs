//! Building the checks of each suite from a fixture.
//!
//! Checks borrow the structures they test, so each suite is built inside
//! its own stack frame and handed to a consumer that either runs it or
//! replays witnesses against it.

use std::sync::Arc;

use anyhow::{anyhow, Result};
use skewcat::backends::coend::{SetFunctor, SmallCategory, VecModule};
use skewcat::backends::finset::Obj;
use skewcat::backends::finvec::FinVec;
use skewcat::cat::{run, Check, Outcome, Witness};
use skewcat::cocomp::*;
use skewcat::liftq::{barphi, barphi_checks, lift_checks, smpq_checks, IdFunctor, QUniverse, Smpq};
use skewcat::modcat::smp2::{smp2_checks, Smp2};
use skewcat::modcat::{algebras, em_checks, forget_checks, ract_checks, EMQuot, EmUniverse, Forget, LiftFunctor, Lifted, TAlg};
use skewcat::mutate::Mutation;
use skewcat::skewmon::set::{dot1_matches_cartesian, r2_check, strength_checks, HomFunctor, Shape};
use skewcat::skewmon::{functor_checks, naturality_checks, scan, smc_checks, Scan, SetSkew};
use skewcat::underlying::{forg, forg_checks, underlying_checks, Sigma, Underlying};

use crate::fixture::{Backend, FixtureDoc, JSpec, Structure, WSpec};

/// Everything a suite produces before it is run.
pub struct SuiteChecks<'a> {
    pub checks: Vec<Check<'a>>,
    pub scan: Option<Box<dyn Fn() -> Scan + 'a>>,
}

impl<'a> SuiteChecks<'a> {
    fn plain(checks: Vec<Check<'a>>) -> Self {
        SuiteChecks { checks, scan: None }
    }

    fn scanned(checks: Vec<Check<'a>>, scan: impl Fn() -> Scan + 'a) -> Self {
        SuiteChecks {
            checks,
            scan: Some(Box::new(scan)),
        }
    }
}

fn set_skew(fx: &FixtureDoc) -> Result<SetSkew> {
    let s = match &fx.structure {
        Structure::Cartesian => SetSkew::cartesian(),
        Structure::Dot { r } => SetSkew::dot(&labels("R", r)),
        Structure::Custom { r: Some(r), .. } => SetSkew::dot(&labels("R", r)),
        Structure::Custom { r: None, .. } => SetSkew::cartesian(),
        Structure::Acu(_) => return Err(anyhow!("suite needs a set-level structure")),
    };
    Ok(s.with_mutations(fx.all_mutations()))
}

fn labels(name: &str, ls: &[String]) -> Obj {
    let v: Vec<&str> = ls.iter().map(String::as_str).collect();
    Obj::atoms(name, &v)
}

/// The object `R` for the underlying suite; the point for the cartesian
/// structure, whose dot counterpart is the one-point dot structure.
fn r_obj(s: &SetSkew) -> Obj {
    match &s.shape {
        Shape::Dot { r } => r.clone(),
        Shape::Cartesian => Obj::atoms("R", &["*"]),
    }
}

fn em_universe(s: &SetSkew, base: Vec<Obj>, carriers: &[Obj]) -> Result<EmUniverse<Obj>> {
    let mut algs = Vec::new();
    for m in carriers {
        algs.extend(algebras(s, m)?);
    }
    Ok(EmUniverse::new(base, algs))
}

/// Small category, unit functor, presheaf universe and subcategory for the
/// acu and cocomp suites.
struct AcuCtx {
    cat: SmallCategory,
    j: Diagram,
    presheaves: Vec<SetFunctor>,
    w: SubcategoryW,
    rank_one: bool,
}

fn acu_ctx(fx: &FixtureDoc) -> Result<AcuCtx> {
    let spec = fx.acu_spec();
    let cat = spec.category.build()?;
    let j = match &spec.j {
        JSpec::Yoneda => Diagram::yoneda(&cat),
        JSpec::Collapsed { object } => {
            let c = cat.object_index(object).ok_or_else(|| anyhow!("unknown object {object:?}"))?;
            Diagram::collapsed(&cat, c)
        }
    };
    let presheaves = iso_classes(&cat, all_presheaves(&cat, fx.presheaf_max())?)?;
    let (w, rank_one) = match spec.w {
        WSpec::All => (SubcategoryW::all("presheaves", presheaves.clone()), false),
        WSpec::RankOne => (SubcategoryW::rank_one(&cat), true),
    };
    Ok(AcuCtx {
        cat,
        j,
        presheaves,
        w,
        rank_one,
    })
}

fn pick(ps: &[SetFunctor], idx: &[i64]) -> Result<Vec<SetFunctor>> {
    idx.iter()
        .map(|&i| {
            ps.get(i as usize)
                .cloned()
                .ok_or_else(|| anyhow!("presheaf index {i} out of range (there are {})", ps.len()))
        })
        .collect()
}

/// Diagrams in `W` on the free rank-one module, capped at three.
fn rank_one_functors(cat: &SmallCategory) -> Result<Vec<Diagram>> {
    let e = SetFunctor::representable(cat, 0);
    Ok(Diagram::all_on(cat, &[e], "V")?.into_iter().take(3).collect())
}

fn acu_functors(fx: &FixtureDoc, ctx: &AcuCtx, acu: &Acu) -> Result<Vec<Arc<Diagram>>> {
    if ctx.rank_one {
        return Ok(rank_one_functors(&ctx.cat)?.into_iter().map(Arc::new).collect());
    }
    let consts = pick(&ctx.presheaves, &fx.universe.constants)?;
    Ok(functor_universe(&ctx.cat, &acu.j, &consts))
}

/// `E⋆V ≅ E` for `E` the free rank-one module and every `V` in the
/// diagram list, each of which takes the value `E`.
fn rank_one_tensor<'a>(cat: &'a SmallCategory, ds: &'a [Diagram]) -> Check<'a> {
    let cases = ds.iter().map(|d| d.name.clone()).collect();
    Check::new("cocomp.rank-one-tensor", cases, move |i| {
        Outcome::from_result((|| {
            let e = SetFunctor::representable(cat, 0);
            let s = star(cat, &e, &ds[i])?;
            Ok(match presheaf_iso(cat, &s.value, &e)? {
                Some(_) => Outcome::Pass,
                None => Outcome::Fail(Witness::new(&ds[i].name, s.value.values[0].size(), e.values[0].size()).with_note("E⊗V is not E")),
            })
        })())
    })
}

fn dim(v: i64) -> usize {
    v as usize
}

/// Build `suite` for `fx` and hand it to `k`.
pub fn with_suite<R>(fx: &FixtureDoc, suite: &str, seed: u64, k: impl FnOnce(SuiteChecks<'_>) -> R) -> Result<R> {
    let muts: Vec<Mutation> = fx.all_mutations();
    match (suite, &fx.backend, &fx.structure) {
        ("cocomp", Backend::Finvec { prime }, _) => {
            let fv = FinVec::new(*prime as u32)?;
            let u = &fx.universe;
            let weights: Vec<VecModule> = u.dims.iter().map(|&d| trivial_module(&fv, dim(d))).collect();
            let ds: Vec<VecModule> = u.diagram_dims.iter().map(|&d| trivial_module(&fv, dim(d))).collect();
            let bound = u.dim_bound.map(dim).unwrap_or(3);
            Ok(k(SuiteChecks::plain(vec_self_cocomplete_checks(&fv, bound, &weights, &ds))))
        }
        ("cocomp", _, _) => {
            let ctx = acu_ctx(fx)?;
            let mut ds = vec![Diagram::yoneda(&ctx.cat)];
            if !fx.universe.diagram_values.is_empty() {
                let vals = pick(&ctx.presheaves, &fx.universe.diagram_values)?;
                if vals.len() != ctx.cat.objects.len() {
                    return Err(anyhow!("diagram_values needs one presheaf per object of C ({})", ctx.cat.objects.len()));
                }
                ds.extend(Diagram::all_on(&ctx.cat, &vals, "D")?);
            }
            for (n, p) in pick(&ctx.presheaves, &fx.universe.constants)?.iter().enumerate() {
                ds.push(Diagram::constant(&ctx.cat, p, format!("C{n}")));
            }
            let free = if ctx.rank_one { rank_one_functors(&ctx.cat)? } else { Vec::new() };
            ds.extend(free.iter().cloned());
            let mut checks = self_cocomplete_checks(&ctx.cat, &ctx.w, &ds);
            if ctx.rank_one {
                checks.push(rank_one_tensor(&ctx.cat, &free));
            }
            Ok(k(SuiteChecks::plain(checks)))
        }
        ("acu", _, _) | ("smc", _, Structure::Acu(_)) => {
            let ctx = acu_ctx(fx)?;
            let acu = Acu::new(&ctx.cat, ctx.j.clone()).with_mutations(muts);
            let fs = acu_functors(fx, &ctx, &acu)?;
            if suite == "smc" {
                let mut checks = smc_checks("smc", &acu, &fs);
                checks.extend(naturality_checks("smc", &acu, &fs));
                return Ok(k(SuiteChecks::scanned(checks, || scan(&acu, &fs))));
            }
            let bimod = Acu::bimodules(&ctx.cat);
            let wb: Vec<_> = well_behaved_checks(&acu, &ctx.w, &fs).iter().map(run).collect();
            let verdict = WellBehaved::from_reports(&wb);
            let mut checks = well_behaved_checks(&acu, &ctx.w, &fs);
            checks.extend(monoidality_checks(&acu, &bimod, &fs, verdict));
            checks.extend(smc_checks("acu", &acu, &fs));
            Ok(k(SuiteChecks::scanned(checks, || scan(&acu, &fs))))
        }
        ("smc", _, _) => {
            let s = set_skew(fx)?;
            let objs = fx.objects();
            let small = fx.em_objects();
            let h = if s.is_dot() { Some(HomFunctor::new(&s)?) } else { None };
            let mut checks = smc_checks("smc", &s, &objs);
            checks.extend(naturality_checks("smc", &s, &small));
            if let Some(h) = &h {
                checks.extend(functor_checks("smc.H", h, &small));
            }
            if r_obj(&s).size() == 1 && s.is_dot() {
                let (s, small) = (&s, &small);
                checks.push(Check::single("smc.dot1-is-cartesian", "R=1", move || {
                    Outcome::from_result(dot1_matches_cartesian(s, small).map(|w| match w {
                        None => Outcome::Pass,
                        Some(w) => Outcome::Fail(w),
                    }))
                }));
            }
            Ok(k(SuiteChecks::scanned(checks, || scan(&s, &objs))))
        }
        ("strengths", _, _) => {
            let s = set_skew(fx)?;
            let objs = fx.objects();
            let vs: Vec<Obj> = objs.iter().filter(|o| o.size() <= 2).cloned().collect();
            let mut checks = strength_checks(&s, &vs, &objs);
            checks.push(r2_check(&s, &objs, seed));
            Ok(k(SuiteChecks::plain(checks)))
        }
        ("em", _, _) => {
            let s = set_skew(fx)?;
            let em = Lifted::new(EMQuot::new(s.clone()).with_mutations(muts));
            let u = em_universe(&s, fx.em_objects(), &fx.carriers())?;
            let g = Forget { em: &em };
            let talgs: Vec<TAlg<Obj>> = u.algs.iter().filter_map(|a| a.alg().cloned()).collect();
            let mut checks = em_checks(&em, &u);
            checks.extend(forget_checks(&g, &u));
            checks.extend(ract_checks(&s, &talgs, &u.base));
            Ok(k(SuiteChecks::scanned(checks, || scan(&em, &u.algs))))
        }
        ("smp2", _, _) => {
            let p = Smp2 { s: set_skew(fx)? };
            let objs = fx.em_objects();
            Ok(k(SuiteChecks::plain(smp2_checks(&p, &objs))))
        }
        ("underlying", _, _) => {
            let s = set_skew(fx)?;
            let u = Underlying::new(&r_obj(&s), muts)?;
            let uni = em_universe(&u.dot, fx.em_objects(), &fx.carriers())?;
            let checks = underlying_checks(&u, &uni);
            Ok(k(SuiteChecks::scanned(checks, || scan(&u.em, &uni.algs))))
        }
        ("forg", _, _) => {
            let s = set_skew(fx)?;
            let sg = Sigma::new(&s);
            let src = Lifted::new(EMQuot::new(s.clone()).with_mutations(muts));
            let tgt = Lifted::new(EMQuot::new(sg.dot.clone()));
            let uni = em_universe(&s, fx.em_objects(), &fx.carriers())?;
            let f = forg(&sg, &src, &tgt);
            Ok(k(SuiteChecks::plain(forg_checks(&sg, &f, &uni))))
        }
        ("smpq", _, _) | ("barphi", _, _) => {
            let s = set_skew(fx)?;
            let sm = Smpq::new(&s);
            let u = QUniverse::new(&sm, &fx.carriers())?;
            let phi = sm.phi();
            let bp = barphi(&sm, &phi);
            let checks = if suite == "smpq" { smpq_checks(&sm, &phi, &u) } else { barphi_checks(&bp, &u) };
            Ok(k(SuiteChecks::plain(checks)))
        }
        ("lift", _, _) => {
            let s = set_skew(fx)?;
            let em = Lifted::new(EMQuot::new(s.clone()).with_mutations(muts));
            let u = em_universe(&s, fx.em_objects(), &fx.carriers())?;
            let sg = Sigma::new(&s);
            let dem = Lifted::new(EMQuot::new(sg.dot.clone()));
            let f = forg(&sg, &em, &dem);
            let idf = IdFunctor { s: s.clone() };
            let idl = LiftFunctor {
                name: "Id".into(),
                k: &idf,
                src: &em,
                tgt: &em,
            };
            let sm = Smpq::new(&s);
            let qu = QUniverse::new(&sm, &fx.carriers())?;
            let phi = sm.phi();
            let bp = barphi(&sm, &phi);
            Ok(k(SuiteChecks::plain(lift_checks(&idl, &f, &bp, &u, &qu))))
        }
        (other, _, _) => Err(anyhow!("unknown suite {other:?}")),
    }
}
