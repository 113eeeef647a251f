//! End-to-end acceptance: one PASS/FAIL line per criterion, exact
//! comparisons only.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use skewcat::backends::finset::{compose_fun, Elem, Obj};
use skewcat::cat::{CheckReport, Replay, Status};
use skewcat::modcat::smp2::{smc4_verdicts, Smp2};
use skewcat::modcat::{j_map, EMQuot, Lifted};
use skewcat::skewmon::{Class, Scan, SetSkew};
use skewcat_cli::demos::{self, MUTATIONS};
use skewcat_cli::{check, replay_witnesses, CheckOptions, FixtureDoc, ReportDoc};

type Verdict = Result<(), String>;

fn fixture(name: &str) -> FixtureDoc {
    FixtureDoc::parse(demos::fixture(name).expect("bundled fixture")).expect("valid fixture")
}

fn run(name: &str) -> (ReportDoc, Duration) {
    let t = Instant::now();
    let r = check(&fixture(name), &CheckOptions::default()).expect("check runs");
    (r, t.elapsed())
}

fn sets(max: usize) -> Vec<Obj> {
    let atoms = ["a", "b", "c"];
    (0..=max).map(|k| Obj::atoms(format!("S{k}"), &atoms[..k])).collect()
}

fn r2() -> Obj {
    Obj::atoms("R", &["0", "1"])
}

fn get<'a>(r: &'a ReportDoc, id: &str) -> Result<&'a CheckReport, String> {
    r.check(id).ok_or_else(|| format!("no check {id}"))
}

fn passes(r: &ReportDoc, ids: &[&str]) -> Verdict {
    for id in ids {
        let c = get(r, id)?;
        if c.status != Status::Pass {
            return Err(format!("{id} is {:?}: {:?} {:?}", c.status, c.witness, c.reason));
        }
    }
    Ok(())
}

fn scan_of<'a>(r: &'a ReportDoc, suite: &str) -> Result<&'a Scan, String> {
    r.suite(suite).and_then(|s| s.scan.as_ref()).ok_or_else(|| format!("no scan for {suite}"))
}

fn within(t: Duration, limit: u64, what: &str) -> Verdict {
    if t > Duration::from_secs(limit) {
        return Err(format!("{what} took {t:?}, over {limit} s"));
    }
    Ok(())
}

/// All tuples of length `k` over `n` objects.
fn count_tuples(n: usize, k: u32) -> usize {
    n.pow(k)
}

fn c1(cart: &ReportDoc, t: Duration) -> Verdict {
    let suites: BTreeSet<&str> = cart.suites.iter().map(|s| s.suite.as_str()).collect();
    for s in ["smc", "strengths", "em", "smp2", "underlying", "forg", "smpq", "barphi", "acu"] {
        if !suites.contains(s) {
            return Err(format!("suite {s} did not run"));
        }
    }
    if let Some(c) = cart.checks().find(|c| c.status != Status::Pass) {
        return Err(format!("{} is {:?}", c.id, c.status));
    }
    for s in &cart.suites {
        if let Some(sc) = &s.scan {
            if let Some(e) = sc.entries.iter().find(|e| e.class != Class::Iso) {
                return Err(format!("{} {} at {:?} is {}", sc.structure, e.family, e.at, e.class));
            }
        }
    }
    within(t, 30, "cartesian")
}

/// Classes of `η` and `ε` for the dot structure at `|R| = 2`, counted from
/// raw tables: `η_M(m) = (id, m)` and `ε_M(f, r) = f(r)`.
fn eta_class(m: usize) -> Class {
    // injective always; onto iff every (e, m) has e = id, i.e. M empty
    if m == 0 {
        Class::Iso
    } else {
        Class::MonicNotEpic
    }
}

fn eps_class(m: usize) -> Class {
    let mut hits = vec![0usize; m];
    for f0 in 0..m {
        for f1 in 0..m {
            hits[f0] += 1;
            hits[f1] += 1;
        }
    }
    match (hits.iter().all(|&h| h <= 1), hits.iter().all(|&h| h >= 1)) {
        (true, true) => Class::Iso,
        (true, false) => Class::MonicNotEpic,
        (false, true) => Class::EpicNotMonic,
        (false, false) => Class::Neither,
    }
}

fn c2(dot: &ReportDoc, t: Duration) -> Verdict {
    passes(dot, &["smc.SMC1", "smc.SMC2", "smc.SMC3", "smc.SMC4", "smc.SMC5"])?;
    let sma: Vec<String> = (6..=15).map(|k| format!("strengths.sma-{k}")).collect();
    passes(dot, &sma.iter().map(String::as_str).collect::<Vec<_>>())?;
    // four objects S0..S3: exhaustive tuple counts
    let n = 4;
    for (id, k) in [("smc.SMC1", 4), ("smc.SMC2", 2), ("smc.SMC3", 2), ("smc.SMC4", 2)] {
        let got = get(dot, id)?.cases;
        if got != count_tuples(n, k) {
            return Err(format!("{id} ran {got} cases, expected {}", count_tuples(n, k)));
        }
    }
    let sc = scan_of(dot, "smc")?;
    for (k, o) in sets(3).iter().enumerate() {
        for (fam, want) in [("eta", eta_class(k)), ("eps", eps_class(k))] {
            let e = sc.find(fam, |e| e.at == [o.name()]).ok_or(format!("no {fam} at {o}"))?;
            if e.class != want {
                return Err(format!("{fam} at {} is {}, oracle says {want}", o.name(), e.class));
            }
            if e.class != Class::Iso && e.witness.is_none() {
                return Err(format!("{fam} at {} has no witness", o.name()));
            }
        }
    }
    sc.find("eta", |e| e.class == Class::MonicNotEpic && e.witness.is_some()).ok_or("no monic-not-epic η")?;
    sc.find("eps", |e| e.class != Class::Iso && e.witness.is_some() && e.at[0] >= "S2".to_string())
        .ok_or("no non-iso ε at |M| >= 2")?;
    sc.find("gamma", |e| e.class != Class::Iso && e.witness.is_some()).ok_or("no non-iso γ")?;
    within(t, 120, "dot2")
}

fn c3(dot: &ReportDoc) -> Verdict {
    passes(
        dot,
        &["em.SMC1", "em.SMC2", "em.SMC3", "em.SMC4", "em.SMC5", "em.act-SMC1", "em.act-SMC3", "em.act-SMC4", "em.eta-invertible"],
    )?;
    // |algebras| per carrier: 1 + 1 + monoid actions of End(2) on 2 points
    let algs = get(dot, "em.eta-invertible")?.cases;
    let want = 1 + 1 + actions_on_two();
    if algs != want {
        return Err(format!("η̄ checked at {algs} algebras, expected {want}"));
    }
    Ok(())
}

/// Monoid actions of End(2) on a two-point set, by brute force over all
/// tables `End(2) x 2 -> 2`.
fn actions_on_two() -> usize {
    let ends: Vec<[usize; 2]> = vec![[0, 0], [0, 1], [1, 0], [1, 1]];
    let comp = |f: [usize; 2], g: [usize; 2]| [f[g[0]], f[g[1]]];
    let idx = |e: [usize; 2]| ends.iter().position(|x| *x == e).unwrap();
    let mut count = 0;
    for code in 0..(1usize << 8) {
        let at = |e: usize, x: usize| (code >> (e * 2 + x)) & 1;
        let unit = (0..2).all(|x| at(1, x) == x);
        let assoc = ends.iter().all(|&f| ends.iter().all(|&g| (0..2).all(|x| at(idx(comp(f, g)), x) == at(idx(f), at(idx(g), x)))));
        count += (unit && assoc) as usize;
    }
    count
}

fn c4(dot: &ReportDoc) -> Verdict {
    passes(dot, &["em.j"])?;
    let em = Lifted::new(EMQuot::new(SetSkew::dot(&r2())));
    for n in sets(3) {
        for m in sets(2) {
            let (j, _) = j_map(&em, &n, &m).map_err(|e| e.to_string())?;
            let want = n.size().pow(2) * m.size();
            if j.dom().size() != want || j.cod().size() != want {
                return Err(format!("|N⊛̂FM| at {},{}: {} vs {want}", n.name(), m.name(), j.dom().size()));
            }
        }
    }
    Ok(())
}

fn c5(cart: &ReportDoc, dot: &ReportDoc) -> Verdict {
    for r in [cart, dot] {
        passes(r, &["smp2.SMC1", "smp2.SMC2", "smp2.SMC3", "smp2.SMC5", "smp2.SMC4-prediction", "smp2.eta-epi-implies-SMC4"])?;
    }
    // SMC4 for ⊛² on raw tables: holds iff one side is empty at |R| = 2,
    // and always for the cartesian structure
    for (s, dot) in [(SetSkew::dot(&r2()), true), (SetSkew::cartesian(), false)] {
        let p = Smp2 { s };
        let objs = sets(2);
        for v in smc4_verdicts(&p, &objs).map_err(|e| e.to_string())? {
            let size = |name: &str| objs.iter().find(|o| o.name() == name).unwrap().size();
            let oracle = !dot || size(&v.at[0]) == 0 || size(&v.at[1]) == 0;
            if v.holds != oracle {
                return Err(format!("SMC4 at {:?}: {} vs oracle {oracle}", v.at, v.holds));
            }
        }
    }
    Ok(())
}

fn c6(dot: &ReportDoc) -> Verdict {
    passes(dot, &["underlying.pair", "underlying.coend", "underlying.formula-eta", "underlying.formula-eps", "underlying.formula-gamma"])
}

fn c7(dot: &ReportDoc) -> Verdict {
    passes(dot, &["forg.strong-iff"])?;
    let pairs = get(dot, "forg.strong-iff")?.cases;
    if pairs != 9 {
        return Err(format!("biconditional checked at {pairs} pairs, expected 9"));
    }
    Ok(())
}

/// Maps `Hom(R,M) -> Hom(R,N)` commuting with precomposition by End(R).
fn equivariant_maps(r: &Obj, m: &Obj, n: &Obj) -> usize {
    let hm = Obj::hom(r, m).elems().unwrap().to_vec();
    let hn = Obj::hom(r, n).elems().unwrap().to_vec();
    let ends = Obj::hom(r, r).elems().unwrap().to_vec();
    let mut count = 0;
    for code in 0..hn.len().pow(hm.len() as u32) {
        let phi: Vec<usize> = (0..hm.len()).map(|i| code / hn.len().pow(i as u32) % hn.len()).collect();
        let at = |f: &Elem| &hn[phi[hm.iter().position(|x| x == f).unwrap()]];
        if hm.iter().all(|f| ends.iter().all(|e| *at(&compose_fun(r, f, e)) == compose_fun(r, at(f), e))) {
            count += 1;
        }
    }
    count
}

fn c8(dot: &ReportDoc) -> Verdict {
    for m in sets(2) {
        for n in sets(2) {
            let (got, want) = (equivariant_maps(&r2(), &m, &n), n.size().pow(m.size() as u32));
            if got != want {
                return Err(format!("J on {},{}: {got} equivariant maps, {want} maps", m.name(), n.name()));
            }
        }
    }
    passes(dot, &["underlying.density", "underlying.eps-iso-if-dense", "underlying.eta-iso", "underlying.gamma-iso-iff-strength"])?;
    let sc = scan_of(dot, "underlying")?;
    if let Some(e) = sc.entries.iter().find(|e| e.class != Class::Iso) {
        return Err(format!("{} at {:?} is {}", e.family, e.at, e.class));
    }
    Ok(())
}

fn c9() -> Verdict {
    let t = Instant::now();
    let (rank1, _) = run("rank1-monoid");
    passes(&rank1, &["cocomp.sc-1", "cocomp.sc-2", "cocomp.rank-one-tensor"])?;
    let (dim, _) = run("dim-bound-counterexample");
    passes(&dim, &["cocomp.sc-1"])?;
    let sc2 = get(&dim, "cocomp.sc-2")?;
    if sc2.status != Status::Fail {
        return Err("sc-2 did not fail on the dimension bound".into());
    }
    let w = sc2.witness.as_ref().ok_or("sc-2 failed without a witness")?;
    let dims: Vec<usize> = w.input.split(',').map(|p| p.trim_start_matches(|c: char| !c.is_ascii_digit()).parse().unwrap()).collect();
    if dims[0] != 2 || w.lhs != format!("dim{}", 2 * dims[1]) {
        return Err(format!("witness {} -> {}, expected dim {}", w.input, w.lhs, 2 * dims[1]));
    }
    within(t.elapsed(), 30, "self-cocompleteness")
}

fn c10() -> Verdict {
    let (r, _) = run("acu-arrow");
    passes(
        &r,
        &[
            "acu.wb-0",
            "acu.wb-1",
            "acu.wb-2",
            "acu.wb-3",
            "acu.wb-1-eta-iso",
            "acu.wb-2-eps-iso",
            "acu.wb-3-gamma-iso",
            "acu.monoidal",
            "acu.strong-J*",
        ],
    )?;
    let sc = scan_of(&r, "acu")?;
    if sc.entries.is_empty() || !sc.all_iso() {
        return Err("acu coherence maps are not all invertible".into());
    }
    Ok(())
}

fn c11(dot: &ReportDoc) -> Verdict {
    passes(
        dot,
        &[
            "smpq.SMC1",
            "smpq.SMC2",
            "smpq.SMC3",
            "smpq.SMC4",
            "smpq.SMC5",
            "barphi.fully-faithful",
            "barphi.essentially-surjective",
            "barphi.phi2-invertible",
        ],
    )
}

fn c12() -> Verdict {
    if MUTATIONS.len() < 10 {
        return Err(format!("only {} mutation fixtures", MUTATIONS.len()));
    }
    let mut families = BTreeSet::new();
    for (name, text) in MUTATIONS {
        let fx = FixtureDoc::parse(text).map_err(|e| format!("{name}: {e}"))?;
        if fx.all_mutations().len() != 1 {
            return Err(format!("{name} is not a single-entry corruption"));
        }
        families.insert(format!("{}:{}", fx.suites.join("+"), fx.mutations[0].family));
        let r = check(&fx, &CheckOptions::default()).map_err(|e| format!("{name}: {e}"))?;
        if r.exit_code() != 1 {
            return Err(format!("{name} exits {}", r.exit_code()));
        }
        let ws = r.witnesses();
        if ws.is_empty() {
            return Err(format!("{name} failed without witnesses"));
        }
        for line in replay_witnesses(&fx, &CheckOptions::default(), &ws).map_err(|e| e.to_string())? {
            if line.result != Replay::Reproduced {
                return Err(format!("{name}: {} at {} gave {:?}", line.check, line.case, line.result));
            }
        }
    }
    if families.len() < 10 {
        return Err(format!("only {} distinct families", families.len()));
    }
    Ok(())
}

#[test]
fn acceptance() {
    let start = Instant::now();
    let (cart, tc) = run("cartesian");
    let (dot, td) = run("dot2");
    let results: Vec<(usize, &str, Verdict)> = vec![
        (1, "baseline collapse on the cartesian fixture", c1(&cart, tc)),
        (2, "skew axioms and invertibility scan at |R|=2", c2(&dot, td)),
        (3, "horizontal tensor axioms and invertible left unitor", c3(&dot)),
        (4, "j isomorphism and split fork", c4(&dot)),
        (5, "iterated tensor axioms and SMC4 oracle", c5(&cart, &dot)),
        (6, "underlying tensor two ways", c6(&dot)),
        (7, "coequalizer iff Forg strong", c7(&dot)),
        (8, "density and monoidal underlying tensor", c8(&dot)),
        (9, "self-cocompleteness and the dimension bound", c9()),
        (10, "functor tensor on the walking arrow", c10()),
        (11, "E-object tensor and comparison functor", c11(&dot)),
        (12, "mutation sensitivity with replay", c12()),
    ];
    let mut failed = 0;
    for (k, what, v) in &results {
        match v {
            Ok(()) => println!("PASS {k:>2} {what}"),
            Err(e) => {
                failed += 1;
                println!("FAIL {k:>2} {what}: {e}");
            }
        }
    }
    let total = start.elapsed();
    let timing = within(total, 300, "acceptance suite");
    match &timing {
        Ok(()) => println!("PASS total time {total:?}"),
        Err(e) => println!("FAIL {e}"),
    }
    assert_eq!(failed, 0, "acceptance criteria failed");
    assert!(timing.is_ok());
}
