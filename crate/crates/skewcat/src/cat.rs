//! Law-checking substrate: computable categories, functors, natural
//! families, and the check runner that turns per-case outcomes into
//! reports with witnesses.

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::backends::finset::Mor;
use crate::error::{Error, Result};

/// A counterexample: the case it was found in, the input at which the two
/// sides were evaluated, and what each side produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub case: String,
    pub input: String,
    pub lhs: String,
    pub rhs: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Witness {
    pub fn new(input: impl fmt::Display, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Witness {
        Witness {
            case: String::new(),
            input: input.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Witness {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Result of one case of a check.
#[derive(Debug, Clone)]
pub enum Outcome {
    Pass,
    Fail(Witness),
    Skip(String),
}

impl Outcome {
    pub fn from_result(r: Result<Outcome>) -> Outcome {
        match r {
            Ok(o) => o,
            Err(Error::Cap(why)) => Outcome::Skip(why),
            Err(Error::Structural { msg, witness }) => Outcome::Fail(match witness {
                Some(w) => w.with_note(msg),
                None => Witness::new("-", "-", "-").with_note(msg),
            }),
            Err(Error::Input(msg)) => Outcome::Fail(Witness::new("-", "-", "-").with_note(format!("input error: {msg}"))),
        }
    }

    /// Pass iff `cond`; otherwise fail with the given witness.
    pub fn when(cond: bool, w: impl FnOnce() -> Witness) -> Outcome {
        if cond {
            Outcome::Pass
        } else {
            Outcome::Fail(w())
        }
    }
}

/// Compare two parallel morphisms pointwise.
pub fn compare(lhs: &Mor, rhs: &Mor) -> Result<Outcome> {
    if !lhs.dom().same(rhs.dom()) || !lhs.cod().same(rhs.cod()) {
        return Ok(Outcome::Fail(
            Witness::new("-", format!("{} -> {}", lhs.dom(), lhs.cod()), format!("{} -> {}", rhs.dom(), rhs.cod()))
                .with_note("the two sides have different types"),
        ));
    }
    Ok(match lhs.first_difference(rhs)? {
        None => Outcome::Pass,
        Some((x, a, b)) => Outcome::Fail(Witness::new(x, a, b)),
    })
}

/// Evaluate an equation built lazily; errors become skips or failures.
pub fn equation(build: impl FnOnce() -> Result<(Mor, Mor)>) -> Outcome {
    Outcome::from_result(build().and_then(|(l, r)| compare(&l, &r)))
}

type Runner<'a> = Box<dyn Fn(usize) -> Outcome + Send + Sync + 'a>;

/// A named check over a finite list of cases.
pub struct Check<'a> {
    pub id: String,
    pub cases: Vec<String>,
    run: Runner<'a>,
}

impl<'a> Check<'a> {
    pub fn new(id: impl Into<String>, cases: Vec<String>, run: impl Fn(usize) -> Outcome + Send + Sync + 'a) -> Self {
        Check {
            id: id.into(),
            cases,
            run: Box::new(run),
        }
    }

    /// A check with a single case.
    pub fn single(id: impl Into<String>, case: impl Into<String>, run: impl Fn() -> Outcome + Send + Sync + 'a) -> Self {
        Check::new(id, vec![case.into()], move |_| run())
    }

    pub fn run_case(&self, i: usize) -> Outcome {
        match (self.run)(i) {
            Outcome::Fail(mut w) => {
                w.case = self.cases[i].clone();
                Outcome::Fail(w)
            }
            o => o,
        }
    }

    pub fn case_index(&self, label: &str) -> Option<usize> {
        self.cases.iter().position(|c| c == label)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    pub status: Status,
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
    pub timing_ms: u64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Run every case (in parallel, on the current rayon pool) and fold the
/// outcomes in case order, so the reported witness is the first failing
/// case regardless of scheduling.
pub fn run(check: &Check) -> CheckReport {
    let start = Instant::now();
    let outcomes: Vec<Outcome> = (0..check.cases.len()).into_par_iter().map(|i| check.run_case(i)).collect();
    let mut rep = CheckReport {
        id: check.id.clone(),
        status: Status::Pass,
        cases: outcomes.len(),
        passed: 0,
        failed: 0,
        skipped: 0,
        witness: None,
        reason: None,
        details: Vec::new(),
        timing_ms: 0,
    };
    for o in outcomes {
        match o {
            Outcome::Pass => rep.passed += 1,
            Outcome::Fail(w) => {
                rep.failed += 1;
                if rep.witness.is_none() {
                    rep.witness = Some(w);
                }
            }
            Outcome::Skip(why) => {
                rep.skipped += 1;
                if rep.reason.is_none() {
                    rep.reason = Some(why);
                }
            }
        }
    }
    rep.status = if rep.failed > 0 {
        Status::Fail
    } else if rep.passed == 0 && rep.skipped > 0 {
        Status::Skipped
    } else {
        Status::Pass
    };
    rep.timing_ms = start.elapsed().as_millis() as u64;
    rep
}

/// Outcome of re-running a recorded witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Replay {
    /// The case fails again with exactly the recorded witness.
    Reproduced,
    /// The case fails, but with a different witness.
    Differs(Box<Witness>),
    /// The case no longer fails.
    NoLongerFails,
    UnknownCase,
}

pub fn replay(check: &Check, w: &Witness) -> Replay {
    let Some(i) = check.case_index(&w.case) else {
        return Replay::UnknownCase;
    };
    match check.run_case(i) {
        Outcome::Fail(got) if got == *w => Replay::Reproduced,
        Outcome::Fail(got) => Replay::Differs(Box::new(got)),
        _ => Replay::NoLongerFails,
    }
}

/// A computable category: objects and morphisms are data, composition and
/// equality are procedures.
pub trait Category: Sync {
    type Obj: Clone + Send + Sync + fmt::Display;
    type Mor: Clone + Send + Sync;

    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn cod(&self, f: &Self::Mor) -> Self::Obj;
    fn same_obj(&self, a: &Self::Obj, b: &Self::Obj) -> bool;
    fn id(&self, a: &Self::Obj) -> Self::Mor;
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;
    /// First point where two parallel morphisms differ: (input, lhs, rhs).
    fn diff(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Option<(String, String, String)>>;
    fn hom(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Vec<Self::Mor>>;
    fn show(&self, f: &Self::Mor) -> String;
}

fn diff_outcome<C: Category>(cat: &C, f: &C::Mor, g: &C::Mor, what: &str) -> Result<Outcome> {
    Ok(match cat.diff(f, g)? {
        None => Outcome::Pass,
        Some((x, a, b)) => Outcome::Fail(Witness::new(x, a, b).with_note(what.to_string())),
    })
}

/// Unit laws on every morphism between universe objects, and associativity
/// on every composable triple.
pub fn check_category_laws<'a, C: Category>(cat: &'a C, objs: &'a [C::Obj]) -> Vec<Check<'a>> {
    let pairs: Vec<(usize, usize)> = (0..objs.len()).flat_map(|a| (0..objs.len()).map(move |b| (a, b))).collect();
    let unit_cases = pairs.iter().map(|&(a, b)| format!("{},{}", objs[a], objs[b])).collect();
    let unit = Check::new("category.unit", unit_cases, move |i| {
        let (a, b) = pairs[i];
        Outcome::from_result((|| {
            let (ia, ib) = (cat.id(&objs[a]), cat.id(&objs[b]));
            for f in cat.hom(&objs[a], &objs[b])? {
                let right = cat.compose(&f, &ia)?;
                if let Outcome::Fail(w) = diff_outcome(cat, &right, &f, &format!("f o id != f for f = {}", cat.show(&f)))? {
                    return Ok(Outcome::Fail(w));
                }
                let left = cat.compose(&ib, &f)?;
                if let Outcome::Fail(w) = diff_outcome(cat, &left, &f, &format!("id o f != f for f = {}", cat.show(&f)))? {
                    return Ok(Outcome::Fail(w));
                }
            }
            Ok(Outcome::Pass)
        })())
    });
    let n = objs.len();
    let quads: Vec<[usize; 4]> = (0..n.pow(4)).map(|k| [k / (n * n * n), (k / (n * n)) % n, (k / n) % n, k % n]).collect();
    let assoc_cases = quads
        .iter()
        .map(|q| format!("{},{},{},{}", objs[q[0]], objs[q[1]], objs[q[2]], objs[q[3]]))
        .collect();
    let assoc = Check::new("category.assoc", assoc_cases, move |i| {
        let [a, b, c, d] = quads[i];
        Outcome::from_result((|| {
            let fs = cat.hom(&objs[a], &objs[b])?;
            let gs = cat.hom(&objs[b], &objs[c])?;
            let hs = cat.hom(&objs[c], &objs[d])?;
            for f in &fs {
                for g in &gs {
                    let gf = cat.compose(g, f)?;
                    for h in &hs {
                        let l = cat.compose(h, &gf)?;
                        let r = cat.compose(&cat.compose(h, g)?, f)?;
                        let note = format!("f = {}, g = {}, h = {}", cat.show(f), cat.show(g), cat.show(h));
                        if let Outcome::Fail(w) = diff_outcome(cat, &l, &r, &note)? {
                            return Ok(Outcome::Fail(w));
                        }
                    }
                }
            }
            Ok(Outcome::Pass)
        })())
    });
    vec![unit, assoc]
}

type ObjMap<'a, C, D> = Box<dyn Fn(&<C as Category>::Obj) -> Result<<D as Category>::Obj> + Send + Sync + 'a>;
type MorMap<'a, C, D> = Box<dyn Fn(&<C as Category>::Mor) -> Result<<D as Category>::Mor> + Send + Sync + 'a>;

/// A functor given by procedures on objects and morphisms.
pub struct FunctorData<'a, C: Category, D: Category> {
    pub name: String,
    pub obj: ObjMap<'a, C, D>,
    pub mor: MorMap<'a, C, D>,
}

impl<'a, C: Category, D: Category> FunctorData<'a, C, D> {
    pub fn new(
        name: impl Into<String>,
        obj: impl Fn(&C::Obj) -> Result<D::Obj> + Send + Sync + 'a,
        mor: impl Fn(&C::Mor) -> Result<D::Mor> + Send + Sync + 'a,
    ) -> Self {
        FunctorData {
            name: name.into(),
            obj: Box::new(obj),
            mor: Box::new(mor),
        }
    }
}

/// F(id) = id on every object, and F(g o f) = F(g) o F(f) on every
/// composable pair between universe objects.
pub fn check_functoriality<'a, C: Category, D: Category>(
    f: &'a FunctorData<'a, C, D>,
    src: &'a C,
    tgt: &'a D,
    objs: &'a [C::Obj],
) -> Vec<Check<'a>> {
    let n = objs.len();
    let ids = Check::new(
        format!("functor.{}.identity", f.name),
        objs.iter().map(|o| o.to_string()).collect(),
        move |i| {
            Outcome::from_result((|| {
                let fo = (f.obj)(&objs[i])?;
                let lhs = (f.mor)(&src.id(&objs[i]))?;
                diff_outcome(tgt, &lhs, &tgt.id(&fo), "F(id) != id")
            })())
        },
    );
    let triples: Vec<[usize; 3]> = (0..n.pow(3)).map(|k| [k / (n * n), (k / n) % n, k % n]).collect();
    let cases = triples.iter().map(|t| format!("{},{},{}", objs[t[0]], objs[t[1]], objs[t[2]])).collect();
    let comp = Check::new(format!("functor.{}.composition", f.name), cases, move |i| {
        let [a, b, c] = triples[i];
        Outcome::from_result((|| {
            for x in src.hom(&objs[a], &objs[b])? {
                for y in src.hom(&objs[b], &objs[c])? {
                    let lhs = (f.mor)(&src.compose(&y, &x)?)?;
                    let rhs = tgt.compose(&(f.mor)(&y)?, &(f.mor)(&x)?)?;
                    let note = format!("f = {}, g = {}", src.show(&x), src.show(&y));
                    if let Outcome::Fail(w) = diff_outcome(tgt, &lhs, &rhs, &note)? {
                        return Ok(Outcome::Fail(w));
                    }
                }
            }
            Ok(Outcome::Pass)
        })())
    });
    vec![ids, comp]
}

type Component<'a, C, D> = Box<dyn Fn(&<C as Category>::Obj) -> Result<<D as Category>::Mor> + Send + Sync + 'a>;

/// A family of components between two functors.
pub struct NatFamily<'a, C: Category, D: Category> {
    pub name: String,
    pub source: &'a FunctorData<'a, C, D>,
    pub target: &'a FunctorData<'a, C, D>,
    pub component: Component<'a, C, D>,
}

/// Every naturality square over morphisms between universe objects.
pub fn check_naturality<'a, C: Category, D: Category>(
    nu: &'a NatFamily<'a, C, D>,
    src: &'a C,
    tgt: &'a D,
    objs: &'a [C::Obj],
) -> Check<'a> {
    let n = objs.len();
    let pairs: Vec<(usize, usize)> = (0..n * n).map(|k| (k / n, k % n)).collect();
    let cases = pairs.iter().map(|&(a, b)| format!("{},{}", objs[a], objs[b])).collect();
    Check::new(format!("naturality.{}", nu.name), cases, move |i| {
        let (a, b) = pairs[i];
        Outcome::from_result((|| {
            let (na, nb) = ((nu.component)(&objs[a])?, (nu.component)(&objs[b])?);
            for f in src.hom(&objs[a], &objs[b])? {
                let lhs = tgt.compose(&(nu.target.mor)(&f)?, &na)?;
                let rhs = tgt.compose(&nb, &(nu.source.mor)(&f)?)?;
                let note = format!("f = {}", src.show(&f));
                if let Outcome::Fail(w) = diff_outcome(tgt, &lhs, &rhs, &note)? {
                    return Ok(Outcome::Fail(w));
                }
            }
            Ok(Outcome::Pass)
        })())
    })
}
