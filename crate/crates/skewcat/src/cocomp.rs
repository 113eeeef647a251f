//! Presheaves over small categories, weighted colimits of presheaf-valued
//! diagrams, self-cocomplete subcategories, the bimodule tensor on `[C,W]`
//! and the skew monoidal structure on `[C,M]` with `(F⊗G)C = J_*(FC)⋆G`.
//!
//! `M` is always realized inside `[C^op, Set]`, so a functor `C -> M` is a
//! [`Diagram`] and colimits are computed pointwise as coends. Quotient
//! elements are representatives in the coend sums, so every structure map
//! is written on representatives and projected.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::backends::coend::{vec_weighted_colimit, weighted_colimit, SetFunctor, SmallCategory, VecModule};
use crate::backends::finset::{hom_set, Elem, Mor, Obj};
use crate::backends::finvec::{FinVec, Mat};
use crate::cat::{Check, CheckReport, Outcome, Status, Witness};
use crate::error::{Error, Result};
use crate::limits;
use crate::mutate::{mutate, Mutation};
use crate::skewmon::{classify, scan, Class, SkewOps};

// ---- natural transformations between presheaves ----

/// Encode the components `p(e) -> q(e)` of a transformation as one element.
pub fn nat_elem(p: &SetFunctor, comps: &[Mor]) -> Result<Elem> {
    let mut out = Vec::with_capacity(comps.len());
    for (e, m) in comps.iter().enumerate() {
        out.push(Elem::fun(p.values[e].elems()?.iter().map(|y| m.apply(y)).collect()));
    }
    Ok(Elem::fun(out))
}

/// Component at `e` of an encoded transformation out of `p`, applied to `y`.
pub fn nat_at(p: &SetFunctor, theta: &Elem, e: usize, y: &Elem) -> Elem {
    let i = p.values[e].index_of(y).unwrap_or_else(|| panic!("{y} is not in {}", p.values[e]));
    theta.table()[e].table()[i].clone()
}

/// Decode an encoded transformation `p -> q` into its components.
pub fn nat_comps(p: &SetFunctor, q: &SetFunctor, theta: &Elem) -> Result<Vec<Mor>> {
    (0..p.values.len())
        .map(|e| Mor::from_table(&p.values[e], &q.values[e], theta.table()[e].table().to_vec()))
        .collect()
}

/// Every natural transformation `p -> q`, encoded, in odometer order.
pub fn nat_set(cat: &SmallCategory, p: &SetFunctor, q: &SetFunctor) -> Result<Vec<Elem>> {
    let n = cat.objects.len();
    let mut count = 1usize;
    for e in 0..n {
        let k = u32::try_from(p.values[e].size())
            .ok()
            .and_then(|x| q.values[e].size().checked_pow(x))
            .and_then(|k| count.checked_mul(k));
        count = match k {
            Some(c) if c <= limits::max_hom() => c,
            _ => return Err(Error::Cap(format!("Nat({},{}) has too many candidates", p.name, q.name))),
        };
    }
    let mut cands: Vec<Vec<Vec<Elem>>> = Vec::with_capacity(n);
    for e in 0..n {
        cands.push(hom_set(&p.values[e], &q.values[e])?.iter().map(|m| m.table()).collect::<Result<_>>()?);
    }
    // an arrow a -> b is checked as soon as both endpoints have components
    let mut due: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, a) in cat.arrows.iter().enumerate() {
        due[a.dom.max(a.cod)].push(i);
    }
    let natural_at = |cur: &[usize], i: usize| -> bool {
        let a = &cat.arrows[i];
        let (ta, tb) = (&cands[a.dom][cur[a.dom]], &cands[a.cod][cur[a.cod]]);
        p.values[a.cod].elems().map_or(false, |ys| {
            ys.iter().enumerate().all(|(k, y)| {
                let l = &ta[p.values[a.dom].index_of(&p.arrows[i].apply(y)).expect("presheaf arrow lands in its codomain")];
                *l == q.arrows[i].apply(&tb[k])
            })
        })
    };
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    fn rec(
        depth: usize,
        cur: &mut Vec<usize>,
        cands: &[Vec<Vec<Elem>>],
        due: &[Vec<usize>],
        ok: &dyn Fn(&[usize], usize) -> bool,
        out: &mut Vec<Elem>,
    ) {
        if depth == cands.len() {
            out.push(Elem::fun((0..cands.len()).map(|e| Elem::fun(cands[e][cur[e]].clone())).collect()));
            return;
        }
        for k in 0..cands[depth].len() {
            cur[depth] = k;
            if due[depth].iter().all(|&i| ok(cur, i)) {
                rec(depth + 1, cur, cands, due, ok, out);
            }
        }
    }
    rec(0, &mut cur, &cands, &due, &natural_at, &mut out);
    Ok(out)
}

/// A natural isomorphism `p -> q`, if there is one.
pub fn presheaf_iso(cat: &SmallCategory, p: &SetFunctor, q: &SetFunctor) -> Result<Option<Elem>> {
    if (0..p.values.len()).any(|e| p.values[e].size() != q.values[e].size()) {
        return Ok(None);
    }
    for theta in nat_set(cat, p, q)? {
        let comps = nat_comps(p, q, &theta)?;
        if comps.iter().map(|m| m.is_injective()).collect::<Result<Vec<_>>>()?.into_iter().all(|b| b) {
            return Ok(Some(theta));
        }
    }
    Ok(None)
}

/// An isomorphic copy of `p` with every element relabelled.
pub fn relabel(cat: &SmallCategory, p: &SetFunctor, mark: &str) -> Result<SetFunctor> {
    let wrap = |x: &Elem| Elem::atom(&format!("{mark}{x}"));
    let mut values = Vec::new();
    for v in &p.values {
        values.push(Obj::explicit(format!("{mark}{v}"), v.elems()?.iter().map(wrap).collect())?);
    }
    let mut arrows = Vec::new();
    for (m, a) in p.arrows.iter().zip(&cat.arrows) {
        let (s, t) = if p.contravariant { (a.cod, a.dom) } else { (a.dom, a.cod) };
        let table: Vec<Elem> = m.dom().elems()?.iter().map(|x| wrap(&m.apply(x))).collect();
        arrows.push(Mor::from_table(&values[s], &values[t], table)?);
    }
    Ok(SetFunctor {
        name: format!("{mark}{}", p.name),
        values,
        arrows,
        contravariant: p.contravariant,
    })
}

/// Every presheaf with values of size at most `max` (atoms `a`, `b`, ...),
/// not reduced up to isomorphism.
pub fn all_presheaves(cat: &SmallCategory, max: usize) -> Result<Vec<SetFunctor>> {
    const ATOMS: [&str; 4] = ["a", "b", "c", "d"];
    if max > ATOMS.len() {
        return Err(Error::Cap(format!("presheaf enumeration is limited to values of size {}", ATOMS.len())));
    }
    let n = cat.objects.len();
    let mut out = Vec::new();
    let mut k = 0usize;
    for sizes in crate::skewmon::tuples(max + 1, n) {
        let values: Vec<Obj> = (0..n)
            .map(|c| Obj::atoms(format!("{}{}", cat.objects[c], sizes[c]), &ATOMS[..sizes[c]]))
            .collect();
        let free: Vec<usize> = (0..cat.arrows.len()).filter(|i| !cat.identities.contains(i)).collect();
        let choices: Vec<Vec<Mor>> = free
            .iter()
            .map(|&i| hom_set(&values[cat.arrows[i].cod], &values[cat.arrows[i].dom]))
            .collect::<Result<_>>()?;
        let total = choices.iter().map(Vec::len).product::<usize>();
        for pick in 0..total {
            let mut rest = pick;
            let mut arrows: Vec<Mor> = cat.arrows.iter().map(|a| Mor::id(&values[a.dom])).collect();
            for (slot, &i) in free.iter().enumerate() {
                let len = choices[slot].len();
                arrows[i] = choices[slot][rest % len].clone();
                rest /= len;
            }
            let p = SetFunctor::presheaf(format!("P{k}"), values.clone(), arrows);
            if p.law_violation(cat)?.is_none() {
                out.push(p);
                k += 1;
            }
        }
    }
    Ok(out)
}

/// One presheaf from each isomorphism class of `ps`, in order.
pub fn iso_classes(cat: &SmallCategory, ps: Vec<SetFunctor>) -> Result<Vec<SetFunctor>> {
    let mut out: Vec<SetFunctor> = Vec::new();
    for p in ps {
        let mut fresh = true;
        for q in &out {
            if presheaf_iso(cat, &p, q)?.is_some() {
                fresh = false;
                break;
            }
        }
        if fresh {
            out.push(p);
        }
    }
    Ok(out)
}

/// The presheaf with a single point everywhere.
pub fn terminal(cat: &SmallCategory) -> SetFunctor {
    SetFunctor::constant(cat, &Obj::point(), true).renamed("1")
}

/// The presheaf with empty values.
pub fn initial(cat: &SmallCategory) -> SetFunctor {
    SetFunctor::constant(cat, &Obj::empty(), true).renamed("0")
}

trait Renamed {
    fn renamed(self, name: &str) -> Self;
}

impl Renamed for SetFunctor {
    fn renamed(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }
}

// ---- diagrams C -> [C^op, Set] ----

/// A functor `C -> [C^op, Set]`: one presheaf per object of `C` and one
/// natural transformation per arrow, given by components.
#[derive(Clone)]
pub struct Diagram {
    pub name: String,
    pub at: Vec<SetFunctor>,
    /// `maps[f][d] : at[a](d) -> at[b](d)` for `f: a -> b`.
    pub maps: Vec<Vec<Mor>>,
    /// For a computed tensor, the projection of each coend sum onto its
    /// representatives, indexed `[c][d]`.
    pub proj: Vec<Vec<Mor>>,
    carrier: Obj,
}

fn tag(cat: &SmallCategory, c: usize, d: usize) -> Elem {
    Elem::pair(Elem::atom(&cat.objects[c]), Elem::atom(&cat.objects[d]))
}

impl Diagram {
    pub fn new(cat: &SmallCategory, name: impl Into<String>, at: Vec<SetFunctor>, maps: Vec<Vec<Mor>>) -> Diagram {
        let name = name.into();
        let n = cat.objects.len();
        let parts = (0..n)
            .flat_map(|c| (0..n).map(move |d| (c, d)))
            .map(|(c, d)| (tag(cat, c, d), at[c].values[d].clone()))
            .collect();
        let carrier = Obj::sum(name.clone(), parts);
        Diagram {
            name,
            at,
            maps,
            proj: Vec::new(),
            carrier,
        }
    }

    pub fn carrier(&self) -> &Obj {
        &self.carrier
    }

    /// The diagram constant at `p`.
    pub fn constant(cat: &SmallCategory, p: &SetFunctor, name: impl Into<String>) -> Diagram {
        let at = vec![p.clone(); cat.objects.len()];
        let maps = cat.arrows.iter().map(|_| p.values.iter().map(Mor::id).collect()).collect();
        Diagram::new(cat, name, at, maps)
    }

    /// The Yoneda embedding `c ↦ C(-,c)`.
    pub fn yoneda(cat: &SmallCategory) -> Diagram {
        let n = cat.objects.len();
        let at: Vec<SetFunctor> = (0..n).map(|c| SetFunctor::representable(cat, c)).collect();
        let maps = cat
            .arrows
            .iter()
            .enumerate()
            .map(|(g, a)| {
                (0..n)
                    .map(|d| {
                        let cat2 = cat.clone();
                        Mor::new(&at[a.dom].values[d], &at[a.cod].values[d], move |f| {
                            let fi = cat2.arrow_index(&f.to_string()).expect("arrow label");
                            Elem::atom(&cat2.arrows[cat2.compose(g, fi).expect("composable")].name)
                        })
                    })
                    .collect()
            })
            .collect();
        Diagram::new(cat, "Y", at, maps)
    }

    /// Every object sent to `C(-,c)` and every arrow to the identity.
    pub fn collapsed(cat: &SmallCategory, c: usize) -> Diagram {
        Diagram::constant(cat, &SetFunctor::representable(cat, c), format!("K{}", cat.objects[c]))
    }

    /// Every functor structure on the given object values, in odometer
    /// order over the non-identity arrows.
    pub fn all_on(cat: &SmallCategory, at: &[SetFunctor], prefix: &str) -> Result<Vec<Diagram>> {
        let free: Vec<usize> = (0..cat.arrows.len()).filter(|i| !cat.identities.contains(i)).collect();
        let mut choices = Vec::new();
        for &i in &free {
            let a = &cat.arrows[i];
            let ns = nat_set(cat, &at[a.dom], &at[a.cod])?;
            choices.push(ns.iter().map(|t| nat_comps(&at[a.dom], &at[a.cod], t)).collect::<Result<Vec<_>>>()?);
        }
        let total = choices.iter().map(Vec::len).product::<usize>();
        if total > limits::max_hom() {
            return Err(Error::Cap(format!("{total} candidate diagrams")));
        }
        let mut out = Vec::new();
        for pick in 0..total {
            let mut rest = pick;
            let mut maps: Vec<Vec<Mor>> = cat.arrows.iter().map(|a| at[a.dom].values.iter().map(Mor::id).collect()).collect();
            for (slot, &i) in free.iter().enumerate() {
                let len = choices[slot].len();
                maps[i] = choices[slot][rest % len].clone();
                rest /= len;
            }
            let d = Diagram::new(cat, format!("{prefix}{}", out.len()), at.to_vec(), maps);
            if d.law_violation(cat)?.is_none() {
                out.push(d);
            }
        }
        Ok(out)
    }

    /// `c ↦ at[c](d)` as a covariant functor.
    pub fn column(&self, cat: &SmallCategory, d: usize) -> SetFunctor {
        SetFunctor::covariant(
            format!("{}[{}]", self.name, cat.objects[d]),
            self.at.iter().map(|p| p.values[d].clone()).collect(),
            self.maps.iter().map(|m| m[d].clone()).collect(),
        )
    }

    /// Component `(c, d)` of a map out of this diagram's carrier.
    pub fn comp(cat: &SmallCategory, f: &Mor, c: usize, d: usize, x: &Elem) -> Elem {
        f.apply(&Elem::pair(tag(cat, c, d), x.clone())).snd().clone()
    }

    pub fn law_violation(&self, cat: &SmallCategory) -> Result<Option<Witness>> {
        let n = cat.objects.len();
        if self.at.len() != n || self.maps.len() != cat.arrows.len() || self.maps.iter().any(|m| m.len() != n) {
            return Err(Error::input(format!("{}: wrong number of values or maps", self.name)));
        }
        for p in &self.at {
            if let Some(w) = p.law_violation(cat)? {
                return Ok(Some(w));
            }
        }
        for (i, a) in cat.arrows.iter().enumerate() {
            let (src, tgt) = (&self.at[a.dom], &self.at[a.cod]);
            for e in 0..n {
                let m = &self.maps[i][e];
                if !m.dom().same(&src.values[e]) || !m.cod().same(&tgt.values[e]) {
                    return Ok(Some(Witness::new(&a.name, m.dom(), m.cod()).with_note("component has the wrong type")));
                }
            }
            for (k, b) in cat.arrows.iter().enumerate() {
                // naturality along k: b.dom -> b.cod, presheaf maps go b.cod -> b.dom
                let l = self.maps[i][b.dom].after(&src.arrows[k]);
                let r = tgt.arrows[k].after(&self.maps[i][b.cod]);
                if let Some((x, u, v)) = l.first_difference(&r)? {
                    return Ok(Some(Witness::new(x, u, v).with_note(format!("image of {} is not natural along {}", a.name, b.name))));
                }
            }
        }
        for (c, &i) in cat.identities.iter().enumerate() {
            for e in 0..n {
                if let Some((x, u, v)) = self.maps[i][e].first_difference(&Mor::id(&self.at[c].values[e]))? {
                    return Ok(Some(Witness::new(x, u, v).with_note(format!("identity of {} not preserved", cat.objects[c]))));
                }
            }
        }
        for f in 0..cat.arrows.len() {
            for g in 0..cat.arrows.len() {
                let Some(gf) = cat.compose(g, f) else { continue };
                for e in 0..n {
                    let r = self.maps[g][e].after(&self.maps[f][e]);
                    if let Some((x, u, v)) = self.maps[gf][e].first_difference(&r)? {
                        return Ok(Some(Witness::new(x, u, v).with_note(format!(
                            "composite {} o {} not preserved",
                            cat.arrows[g].name, cat.arrows[f].name
                        ))));
                    }
                }
            }
        }
        Ok(None)
    }
}

// ---- weighted colimits ----

/// `W ⋆ G` for a presheaf weight and a presheaf-valued diagram, computed
/// pointwise: a presheaf with the coend projection at each object.
pub struct Star {
    pub value: SetFunctor,
    pub proj: Vec<Mor>,
}

fn obj_index(cat: &SmallCategory) -> Arc<HashMap<Elem, usize>> {
    Arc::new(cat.objects.iter().enumerate().map(|(i, o)| (Elem::atom(o), i)).collect())
}

pub fn star(cat: &SmallCategory, w: &SetFunctor, g: &Diagram) -> Result<Star> {
    let n = cat.objects.len();
    let mut values = Vec::with_capacity(n);
    let mut proj = Vec::with_capacity(n);
    for d in 0..n {
        let ce = weighted_colimit(cat, w, &g.column(cat, d))?;
        values.push(ce.obj().clone());
        proj.push(ce.coeq.proj.clone());
    }
    let idx = obj_index(cat);
    let mut arrows = Vec::with_capacity(cat.arrows.len());
    for (i, a) in cat.arrows.iter().enumerate() {
        // f: d' -> d acts values[d] -> values[d'] through G's presheaf maps
        let acts: Vec<Mor> = g.at.iter().map(|p| p.arrows[i].clone()).collect();
        let (p, idx) = (proj[a.dom].clone(), idx.clone());
        let m = Mor::new(&values[a.cod], &values[a.dom], move |x| {
            let c = idx[x.fst()];
            let (u, y) = (x.snd().fst(), x.snd().snd());
            p.apply(&Elem::pair(x.fst().clone(), Elem::pair(u.clone(), acts[c].apply(y))))
        });
        arrows.push(m.tabulate()?);
    }
    Ok(Star {
        value: SetFunctor::presheaf(format!("({}*{})", w.name, g.name), values, arrows),
        proj,
    })
}

/// The co-Yoneda map `G c -> C(-,c) ⋆ G`, `x ↦ [c, (1_c, x)]`, at each object.
pub fn co_yoneda(cat: &SmallCategory, c: usize, g: &Diagram) -> Result<Vec<Mor>> {
    let y = SetFunctor::representable(cat, c);
    let s = star(cat, &y, g)?;
    let id = Elem::atom(&cat.arrows[cat.identities[c]].name);
    let oc = Elem::atom(&cat.objects[c]);
    (0..cat.objects.len())
        .map(|d| {
            let (p, id, oc) = (s.proj[d].clone(), id.clone(), oc.clone());
            Mor::new(&g.at[c].values[d], &s.value.values[d], move |x| p.apply(&Elem::pair(oc.clone(), Elem::pair(id.clone(), x.clone()))))
                .tabulate()
        })
        .collect()
}

fn first_non_iso(ms: &[Mor]) -> Result<Option<(usize, Class, Option<Witness>)>> {
    for (i, m) in ms.iter().enumerate() {
        let (class, w) = classify(m)?;
        if class != Class::Iso {
            return Ok(Some((i, class, w)));
        }
    }
    Ok(None)
}

// ---- self-cocomplete subcategories ----

type Membership = dyn Fn(&SmallCategory, &SetFunctor) -> Result<bool> + Send + Sync;

/// A full replete subcategory of presheaves: a membership test plus the
/// finite list of members used as weights.
#[derive(Clone)]
pub struct SubcategoryW {
    pub name: String,
    pub member: Arc<Membership>,
    pub generators: Vec<SetFunctor>,
}

impl SubcategoryW {
    pub fn all(name: impl Into<String>, generators: Vec<SetFunctor>) -> SubcategoryW {
        SubcategoryW {
            name: name.into(),
            member: Arc::new(|_, _| Ok(true)),
            generators,
        }
    }

    /// Presheaves isomorphic to one of `reps`.
    pub fn closure_of(name: impl Into<String>, reps: Vec<SetFunctor>, generators: Vec<SetFunctor>) -> SubcategoryW {
        SubcategoryW {
            name: name.into(),
            member: Arc::new(move |cat, p| {
                for r in &reps {
                    if presheaf_iso(cat, p, r)?.is_some() {
                        return Ok(true);
                    }
                }
                Ok(false)
            }),
            generators,
        }
    }

    /// Over a one-object category: right `E`-sets free of rank one.
    pub fn rank_one(cat: &SmallCategory) -> SubcategoryW {
        let e = SetFunctor::representable(cat, 0);
        SubcategoryW::closure_of("rank-1 free", vec![e.clone()], vec![e])
    }

    pub fn contains(&self, cat: &SmallCategory, p: &SetFunctor) -> Result<bool> {
        (self.member)(cat, p)
    }

    pub fn contains_diagram(&self, cat: &SmallCategory, f: &Diagram) -> Result<bool> {
        for p in &f.at {
            if !self.contains(cat, p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn sizes(p: &SetFunctor) -> String {
    p.values.iter().map(|v| v.size().to_string()).collect::<Vec<_>>().join("/")
}

/// sc-1, sc-2, repleteness on the generators, the comparison of
/// "`U⋆F ∈ W` for every `U ∈ W`" with "`F c ∈ W` for every `c`", and
/// co-Yoneda on every diagram.
pub fn self_cocomplete_checks<'a>(cat: &'a SmallCategory, w: &'a SubcategoryW, diagrams: &'a [Diagram]) -> Vec<Check<'a>> {
    let n = cat.objects.len();
    let mut out = Vec::new();
    out.push(Check::new("cocomp.sc-1", cat.objects.clone(), move |c| {
        Outcome::from_result((|| {
            let y = SetFunctor::representable(cat, c);
            Ok(Outcome::when(w.contains(cat, &y)?, || {
                Witness::new(&y.name, sizes(&y), "not in W").with_note("representable is not a member")
            }))
        })())
    }));
    let in_w: Vec<usize> = (0..diagrams.len())
        .filter(|&k| w.contains_diagram(cat, &diagrams[k]).unwrap_or(true))
        .collect();
    let pairs: Vec<(usize, usize)> = (0..w.generators.len()).flat_map(|u| in_w.iter().map(move |&f| (u, f))).collect();
    let cases = pairs.iter().map(|&(u, f)| format!("{},{}", w.generators[u].name, diagrams[f].name)).collect();
    out.push(Check::new("cocomp.sc-2", cases, move |i| {
        let (u, f) = pairs[i];
        Outcome::from_result((|| {
            let s = star(cat, &w.generators[u], &diagrams[f])?;
            Ok(Outcome::when(w.contains(cat, &s.value)?, || {
                Witness::new(format!("{}*{}", w.generators[u].name, diagrams[f].name), sizes(&s.value), "not in W")
                    .with_note("weighted colimit leaves W")
            }))
        })())
    }));
    out.push(Check::new(
        "cocomp.replete",
        w.generators.iter().map(|p| p.name.clone()).collect(),
        move |i| {
            Outcome::from_result((|| {
                let p = &w.generators[i];
                let (a, b) = (w.contains(cat, p)?, w.contains(cat, &relabel(cat, p, "~")?)?);
                Ok(Outcome::when(a == b, || Witness::new(&p.name, a, b).with_note("membership differs on an isomorphic copy")))
            })())
        },
    ));
    out.push(Check::new("cocomp.pointwise-membership", diagrams.iter().map(|f| f.name.clone()).collect(), move |k| {
        Outcome::from_result((|| {
            let f = &diagrams[k];
            let mut weights: Vec<SetFunctor> = (0..n).map(|c| SetFunctor::representable(cat, c)).collect();
            weights.extend(w.generators.iter().cloned());
            let mut all_stars = true;
            for u in &weights {
                if !w.contains(cat, &star(cat, u, f)?.value)? {
                    all_stars = false;
                    break;
                }
            }
            let values = w.contains_diagram(cat, f)?;
            Ok(Outcome::when(all_stars == values, || {
                Witness::new(&f.name, format!("stars in W: {all_stars}"), format!("values in W: {values}"))
            }))
        })())
    }));
    let cy: Vec<(usize, usize)> = (0..diagrams.len()).flat_map(|f| (0..n).map(move |c| (f, c))).collect();
    let cases = cy.iter().map(|&(f, c)| format!("{},{}", diagrams[f].name, cat.objects[c])).collect();
    out.push(Check::new("cocomp.co-yoneda", cases, move |i| {
        let (f, c) = cy[i];
        Outcome::from_result((|| {
            let ms = co_yoneda(cat, c, &diagrams[f])?;
            Ok(match first_non_iso(&ms)? {
                None => Outcome::Pass,
                Some((d, class, w)) => Outcome::Fail(
                    w.unwrap_or_else(|| Witness::new("-", "-", "-"))
                        .with_note(format!("co-Yoneda map at {} is {class}", cat.objects[d])),
                ),
            })
        })())
    }));
    out
}

/// The same conditions for spaces of dimension below `bound` over the
/// trivial one-object category, where `U ⋆ F` is the tensor product.
/// `weights` and `diagrams` act by the identity.
pub fn vec_self_cocomplete_checks<'a>(fv: &'a FinVec, bound: usize, weights: &'a [VecModule], diagrams: &'a [VecModule]) -> Vec<Check<'a>> {
    let mut out = Vec::new();
    out.push(Check::single("cocomp.sc-1", "E", move || {
        Outcome::when(1 < bound, || Witness::new("E", "dim1", format!("dim<{bound}")).with_note("representable is not a member"))
    }));
    let us: Vec<usize> = (0..weights.len()).filter(|&u| weights[u].dim < bound).collect();
    let fs: Vec<usize> = (0..diagrams.len()).filter(|&f| diagrams[f].dim < bound).collect();
    let pairs: Vec<(usize, usize)> = us.iter().flat_map(|&u| fs.iter().map(move |&f| (u, f))).collect();
    let cases = pairs.iter().map(|&(u, f)| format!("U=dim{},F=dim{}", weights[u].dim, diagrams[f].dim)).collect();
    out.push(Check::new("cocomp.sc-2", cases, move |i| {
        let (u, f) = pairs[i];
        Outcome::from_result((|| {
            let d = vec_weighted_colimit(fv, &weights[u], &diagrams[f])?.dim;
            Ok(Outcome::when(d < bound, || {
                Witness::new(format!("U=dim{},F=dim{}", weights[u].dim, diagrams[f].dim), format!("dim{d}"), format!("dim<{bound}"))
                    .with_note("weighted colimit leaves W")
            }))
        })())
    }));
    out
}

/// A space of dimension `dim` over the trivial category.
pub fn trivial_module(fv: &FinVec, dim: usize) -> VecModule {
    VecModule {
        dim,
        actions: vec![Mat::identity(fv.p, dim)],
    }
}

// ---- the skew monoidal structure on [C, M] ----

/// Which presheaf weights the tensor: `J_*(FC)` for the ACU structure, or
/// `FC` itself for the bimodule tensor `∫^C F(B,C) x G(C,D)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weights {
    Along,
    Direct,
}

pub struct Acu {
    pub cat: SmallCategory,
    pub mode: Weights,
    /// The unit: `J`, or the Yoneda embedding for the bimodule tensor.
    pub j: Arc<Diagram>,
    pub muts: Vec<Mutation>,
    idx: Arc<HashMap<Elem, usize>>,
    tensors: Mutex<HashMap<String, Arc<Diagram>>>,
    lowers: Mutex<HashMap<String, Arc<SetFunctor>>>,
    stars: Mutex<HashMap<String, Arc<Star>>>,
    cmps: Mutex<HashMap<String, Arc<Vec<Mor>>>>,
}

fn cached<T>(cache: &Mutex<HashMap<String, Arc<T>>>, key: &str, make: impl FnOnce() -> Result<T>) -> Result<Arc<T>> {
    if let Some(v) = cache.lock().expect("cache lock").get(key) {
        return Ok(v.clone());
    }
    let v = Arc::new(make()?);
    cache.lock().expect("cache lock").insert(key.to_string(), v.clone());
    Ok(v)
}

impl Acu {
    /// Apply coherence mutations, refusing any that move a point out of its
    /// `(c, d)` summand: those do not describe a family of components.
    fn mutated(&self, family: &str, at: &[String], m: Mor) -> Result<Mor> {
        if self.muts.is_empty() {
            return Ok(m);
        }
        let m = mutate(&self.muts, family, at, m)?;
        for x in m.dom().elems()?.iter() {
            if m.apply(x).fst() != x.fst() {
                return Err(Error::input(format!("{family} mutation moves {x} out of its summand")));
            }
        }
        Ok(m)
    }

    /// The ACU structure for `J : C -> [C^op, Set]`.
    pub fn new(cat: &SmallCategory, j: Diagram) -> Acu {
        Acu::build(cat, j, Weights::Along)
    }

    /// The bimodule tensor on `[C, [C^op, Set]]` with the Yoneda unit.
    pub fn bimodules(cat: &SmallCategory) -> Acu {
        Acu::build(cat, Diagram::yoneda(cat), Weights::Direct)
    }

    fn build(cat: &SmallCategory, j: Diagram, mode: Weights) -> Acu {
        Acu {
            cat: cat.clone(),
            mode,
            j: Arc::new(j),
            muts: Vec::new(),
            idx: obj_index(cat),
            tensors: Mutex::default(),
            lowers: Mutex::default(),
            stars: Mutex::default(),
            cmps: Mutex::default(),
        }
    }

    pub fn with_mutations(mut self, muts: Vec<Mutation>) -> Acu {
        self.muts = muts;
        self
    }

    fn ix(&self, o: &Elem) -> usize {
        self.idx[o]
    }

    /// `J_* X = Nat(J-, X)`.
    pub fn lower(&self, x: &SetFunctor) -> Result<Arc<SetFunctor>> {
        cached(&self.lowers, &x.name, || {
            let (cat, j) = (&self.cat, &self.j);
            let n = cat.objects.len();
            let mut values = Vec::with_capacity(n);
            for c in 0..n {
                values.push(Obj::explicit(format!("J*{}({})", x.name, cat.objects[c]), nat_set(cat, &j.at[c], x)?)?);
            }
            let mut arrows = Vec::new();
            for (f, a) in cat.arrows.iter().enumerate() {
                // θ : J b -> X goes to θ ∘ J f : J a -> X
                let (ja, jb, jf) = (j.at[a.dom].clone(), j.at[a.cod].clone(), j.maps[f].clone());
                let m = Mor::new(&values[a.cod], &values[a.dom], move |theta| {
                    Elem::fun(
                        (0..ja.values.len())
                            .map(|e| {
                                let ys = ja.values[e].elems().expect("presheaf values enumerate");
                                Elem::fun(ys.iter().map(|y| nat_at(&jb, theta, e, &jf[e].apply(y))).collect())
                            })
                            .collect(),
                    )
                });
                arrows.push(m.tabulate()?);
            }
            Ok(SetFunctor::presheaf(format!("J*{}", x.name), values, arrows))
        })
    }

    /// `J_* α` for `α : X -> X'` given by components.
    pub fn lower_map(&self, x: &SetFunctor, x2: &SetFunctor, alpha: &[Mor]) -> Result<Vec<Mor>> {
        let (lx, lx2) = (self.lower(x)?, self.lower(x2)?);
        (0..self.cat.objects.len())
            .map(|c| {
                let (jc, alpha) = (self.j.at[c].clone(), alpha.to_vec());
                Mor::new(&lx.values[c], &lx2.values[c], move |theta| post(&jc, &alpha, theta)).tabulate()
            })
            .collect()
    }

    /// `J_* G = J_* ∘ G`.
    pub fn lower_diagram(&self, g: &Diagram) -> Result<Diagram> {
        let at = g.at.iter().map(|p| self.lower(p).map(|l| (*l).clone())).collect::<Result<Vec<_>>>()?;
        let maps = self
            .cat
            .arrows
            .iter()
            .enumerate()
            .map(|(f, a)| self.lower_map(&g.at[a.dom], &g.at[a.cod], &g.maps[f]))
            .collect::<Result<Vec<_>>>()?;
        Ok(Diagram::new(&self.cat, format!("J*{}", g.name), at, maps))
    }

    pub fn star(&self, w: &SetFunctor, g: &Diagram) -> Result<Arc<Star>> {
        cached(&self.stars, &format!("{}*{}", w.name, g.name), || star(&self.cat, w, g))
    }

    fn weight(&self, f: &Diagram, c: usize) -> Result<Arc<SetFunctor>> {
        match self.mode {
            Weights::Direct => Ok(Arc::new(f.at[c].clone())),
            Weights::Along => self.lower(&f.at[c]),
        }
    }

    fn weight_map(&self, f: &Diagram, g: usize) -> Result<Vec<Mor>> {
        let a = &self.cat.arrows[g];
        match self.mode {
            Weights::Direct => Ok(f.maps[g].clone()),
            Weights::Along => self.lower_map(&f.at[a.dom], &f.at[a.cod], &f.maps[g]),
        }
    }

    /// The comparison `J_{U,G} : U ⋆ J_*G -> J_*(U ⋆ G)` at each object,
    /// `[c', (θ, φ)] ↦ (y ↦ [c', (θ, φ y)])`.
    pub fn comparison(&self, u: &SetFunctor, g: &Diagram) -> Result<Arc<Vec<Mor>>> {
        cached(&self.cmps, &format!("{}|{}", u.name, g.name), || {
            let cat = &self.cat;
            let jg = self.lower_diagram(g)?;
            let s1 = self.star(u, &jg)?;
            let s2 = self.star(u, g)?;
            let target = self.lower(&s2.value)?;
            let mut out = Vec::new();
            for c2 in 0..cat.objects.len() {
                let (jc, p2) = (self.j.at[c2].clone(), s2.proj.clone());
                let m = Mor::new(&s1.value.values[c2], &target.values[c2], move |x| {
                    let (c1, theta, phi) = (x.fst(), x.snd().fst(), x.snd().snd());
                    Elem::fun(
                        (0..jc.values.len())
                            .map(|e| {
                                let ys = jc.values[e].elems().expect("presheaf values enumerate");
                                Elem::fun(
                                    ys.iter()
                                        .map(|y| p2[e].apply(&Elem::pair(c1.clone(), Elem::pair(theta.clone(), nat_at(&jc, phi, e, y)))))
                                        .collect(),
                                )
                            })
                            .collect(),
                    )
                });
                let table = m.table()?;
                if let Some((x, y)) = s1.value.values[c2].elems()?.iter().zip(&table).find(|(_, y)| !target.values[c2].contains(y)) {
                    return Err(Error::structural_at("comparison leaves J_*(U*G)", Witness::new(x, y, "-")));
                }
                let m = Mor::from_table(&s1.value.values[c2], &target.values[c2], table)?;
                out.push(mutate(&self.muts, "J", &[u.name.clone(), g.name.clone(), cat.objects[c2].clone()], m)?);
            }
            Ok(out)
        })
    }

    /// A map between carriers from its components on representatives.
    fn total(&self, a: &Diagram, b: &Diagram, f: impl Fn(usize, usize, &Elem) -> Result<Elem>) -> Result<Mor> {
        let n = self.cat.objects.len();
        let mut table = Vec::with_capacity(a.carrier.size());
        for c in 0..n {
            for d in 0..n {
                for x in a.at[c].values[d].elems()?.iter() {
                    table.push(Elem::pair(tag(&self.cat, c, d), f(c, d, x)?));
                }
            }
        }
        Mor::from_table(&a.carrier, &b.carrier, table)
    }

    /// The element of the unit's weight at `c` that `η` starts from: the
    /// identity of `c`, or `J` of it.
    fn unit_point(&self, c: usize) -> Result<Elem> {
        let id = self.cat.identities[c];
        match self.mode {
            Weights::Direct => Ok(Elem::atom(&self.cat.arrows[id].name)),
            Weights::Along => nat_elem(&self.j.at[c], &self.j.maps[id]),
        }
    }
}

/// Project `y`, the image of `x`, onto its class. A whiskered map that is
/// not natural can land outside the coend sum.
fn into_coend(proj: &Mor, x: &Elem, y: Elem) -> Result<Elem> {
    if !proj.dom().contains(&y) {
        return Err(Error::structural_at("whiskered map is not natural", Witness::new(x, &y, "-")));
    }
    Ok(proj.apply(&y))
}

/// `α ∘ θ` for `θ` encoded out of `p`.
fn post(p: &SetFunctor, alpha: &[Mor], theta: &Elem) -> Elem {
    Elem::fun(
        (0..p.values.len())
            .map(|e| {
                let ys = p.values[e].elems().expect("presheaf values enumerate");
                Elem::fun(ys.iter().map(|y| alpha[e].apply(&nat_at(p, theta, e, y))).collect())
            })
            .collect(),
    )
}

impl SkewOps for Acu {
    type O = Arc<Diagram>;

    fn name(&self) -> String {
        match self.mode {
            Weights::Along => format!("acu[{},J={}]", self.cat.name, self.j.name),
            Weights::Direct => format!("bimod[{}]", self.cat.name),
        }
    }

    fn label(&self, a: &Self::O) -> String {
        a.name.clone()
    }

    fn carrier(&self, a: &Self::O) -> Obj {
        a.carrier.clone()
    }

    fn unit(&self) -> Self::O {
        self.j.clone()
    }

    fn tensor(&self, f: &Self::O, g: &Self::O) -> Result<Self::O> {
        let key = format!("({}.{})", f.name, g.name);
        cached(&self.tensors, &key, || {
            let cat = &self.cat;
            let n = cat.objects.len();
            let mut at = Vec::with_capacity(n);
            let mut proj = Vec::with_capacity(n);
            for c in 0..n {
                let s = self.star(&*self.weight(f, c)?, g)?;
                let mut v = s.value.clone();
                v.name = format!("{key}@{}", cat.objects[c]);
                at.push(v);
                proj.push(s.proj.clone());
            }
            let mut maps = Vec::with_capacity(cat.arrows.len());
            for (gi, a) in cat.arrows.iter().enumerate() {
                let wm = self.weight_map(f, gi)?;
                let mut comps = Vec::with_capacity(n);
                for d in 0..n {
                    let (p, wm, idx) = (proj[a.cod][d].clone(), wm.clone(), self.idx.clone());
                    let m = Mor::new(&at[a.dom].values[d], &at[a.cod].values[d], move |x| {
                        let c1 = idx[x.fst()];
                        p.apply(&Elem::pair(x.fst().clone(), Elem::pair(wm[c1].apply(x.snd().fst()), x.snd().snd().clone())))
                    });
                    comps.push(m.tabulate()?);
                }
                maps.push(comps);
            }
            let mut t = Diagram::new(cat, key.clone(), at, maps);
            t.proj = proj;
            Ok(t)
        })
    }

    fn whisker_left(&self, f: &Mor, a: &Self::O, a2: &Self::O, b: &Self::O) -> Result<Mor> {
        let (ab, a2b) = (self.tensor(a, b)?, self.tensor(a2, b)?);
        let cat = &self.cat;
        self.total(&ab, &a2b, |c, d, x| {
            let c1 = self.ix(x.fst());
            let w = x.snd().fst();
            let w2 = match self.mode {
                Weights::Direct => Diagram::comp(cat, f, c, c1, w),
                Weights::Along => {
                    let fc: Vec<Mor> = (0..cat.objects.len())
                        .map(|e| {
                            let f = f.clone();
                            let t = tag(cat, c, e);
                            Mor::new(&a.at[c].values[e], &a2.at[c].values[e], move |y| f.apply(&Elem::pair(t.clone(), y.clone())).snd().clone())
                        })
                        .collect();
                    post(&self.j.at[c1], &fc, w)
                }
            };
            into_coend(&a2b.proj[c][d], x, Elem::pair(x.fst().clone(), Elem::pair(w2, x.snd().snd().clone())))
        })
    }

    fn whisker_right(&self, a: &Self::O, g: &Mor, b: &Self::O, b2: &Self::O) -> Result<Mor> {
        let (ab, ab2) = (self.tensor(a, b)?, self.tensor(a, b2)?);
        self.total(&ab, &ab2, |c, d, x| {
            let c1 = self.ix(x.fst());
            let y = Diagram::comp(&self.cat, g, c1, d, x.snd().snd());
            into_coend(&ab2.proj[c][d], x, Elem::pair(x.fst().clone(), Elem::pair(x.snd().fst().clone(), y)))
        })
    }

    fn gamma(&self, f: &Self::O, g: &Self::O, h: &Self::O) -> Result<Mor> {
        let gh = self.tensor(g, h)?;
        let fg = self.tensor(f, g)?;
        let (left, right) = (self.tensor(f, &gh)?, self.tensor(&fg, h)?);
        let m = self.total(&left, &right, |c, d, x| {
            // x = [c', (w, [c'', (v, h)])]
            let (c1, w, z) = (x.fst(), x.snd().fst(), x.snd().snd());
            let (c2, v, hx) = (z.fst(), z.snd().fst(), z.snd().snd());
            let i2 = self.ix(c2);
            let inner = match self.mode {
                Weights::Direct => fg.proj[c][i2].apply(&Elem::pair(c1.clone(), Elem::pair(w.clone(), v.clone()))),
                Weights::Along => {
                    let u = self.weight(f, c)?;
                    let jg = self.lower_diagram(g)?;
                    let s1 = self.star(&u, &jg)?;
                    let cmp = self.comparison(&u, g)?;
                    cmp[i2].apply(&s1.proj[i2].apply(&Elem::pair(c1.clone(), Elem::pair(w.clone(), v.clone()))))
                }
            };
            Ok(right.proj[c][d].apply(&Elem::pair(c2.clone(), Elem::pair(inner, hx.clone()))))
        })?;
        self.mutated("gamma", &[f.name.clone(), g.name.clone(), h.name.clone()], m)
    }

    fn eta(&self, g: &Self::O) -> Result<Mor> {
        let jg = self.tensor(&self.j, g)?;
        let points: Vec<Elem> = (0..self.cat.objects.len()).map(|c| self.unit_point(c)).collect::<Result<_>>()?;
        let m = self.total(g, &jg, |c, d, x| {
            Ok(jg.proj[c][d].apply(&Elem::pair(Elem::atom(&self.cat.objects[c]), Elem::pair(points[c].clone(), x.clone()))))
        })?;
        self.mutated("eta", &[g.name.clone()], m)
    }

    fn eps(&self, f: &Self::O) -> Result<Mor> {
        let fj = self.tensor(f, &self.j)?;
        let cat = &self.cat;
        let m = self.total(&fj, f, |c, d, x| {
            let c1 = self.ix(x.fst());
            let (w, j) = (x.snd().fst(), x.snd().snd());
            Ok(match self.mode {
                Weights::Direct => {
                    let a = cat.arrow_index(&j.to_string()).ok_or_else(|| Error::input(format!("{j} is not an arrow")))?;
                    f.at[c].arrows[a].apply(w)
                }
                Weights::Along => nat_at(&self.j.at[c1], w, d, j),
            })
        })?;
        self.mutated("eps", &[f.name.clone()], m)
    }

    fn is_morphism(&self, m: &Mor, a: &Self::O, b: &Self::O) -> Result<bool> {
        let cat = &self.cat;
        let n = cat.objects.len();
        for x in a.carrier.elems()?.iter() {
            if m.apply(x).fst() != x.fst() {
                return Ok(false);
            }
        }
        let comp = |c: usize, d: usize| {
            let (m, t) = (m.clone(), tag(cat, c, d));
            Mor::new(&a.at[c].values[d], &b.at[c].values[d], move |y| m.apply(&Elem::pair(t.clone(), y.clone())).snd().clone())
        };
        for c in 0..n {
            for (k, e) in cat.arrows.iter().enumerate() {
                let l = comp(c, e.dom).after(&a.at[c].arrows[k]);
                let r = b.at[c].arrows[k].after(&comp(c, e.cod));
                if !l.equals(&r)? {
                    return Ok(false);
                }
            }
        }
        for (g, e) in cat.arrows.iter().enumerate() {
            for d in 0..n {
                let l = comp(e.cod, d).after(&a.maps[g][d]);
                let r = b.maps[g][d].after(&comp(e.dom, d));
                if !l.equals(&r)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn hom(&self, a: &Self::O, b: &Self::O) -> Result<Vec<Mor>> {
        let n = self.cat.objects.len();
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|c| (0..n).map(move |d| (c, d))).collect();
        let mut count = 1usize;
        let mut choices = Vec::new();
        for &(c, d) in &slots {
            let (x, y) = (&a.at[c].values[d], &b.at[c].values[d]);
            let k = u32::try_from(x.size()).ok().and_then(|e| y.size().checked_pow(e));
            count = match k.and_then(|k| count.checked_mul(k)) {
                Some(t) if t <= limits::max_hom() => t,
                _ => return Err(Error::Cap(format!("Hom({},{}) has too many candidates", a.name, b.name))),
            };
            choices.push(hom_set(x, y)?);
        }
        let mut out = Vec::new();
        for pick in 0..count {
            let mut rest = pick;
            let mut sel = Vec::with_capacity(slots.len());
            for ch in &choices {
                sel.push(ch[rest % ch.len()].clone());
                rest /= ch.len();
            }
            let m = self.total(a, b, |c, d, x| Ok(sel[c * n + d].apply(x)))?;
            if self.is_morphism(&m, a, b)? {
                out.push(m);
            }
        }
        Ok(out)
    }
}

// ---- well-behavedness and monoidality ----

/// wb-0 to wb-3 for the unit `J` of `acu` with `M = W`. `functors` are the
/// diagrams `C -> M` tried for wb-0 and wb-3; the generators of `w` serve
/// as weights and as the objects of `M` for wb-2.
pub fn well_behaved_checks<'a>(acu: &'a Acu, w: &'a SubcategoryW, functors: &'a [Arc<Diagram>]) -> Vec<Check<'a>> {
    let cat = &acu.cat;
    let n = cat.objects.len();
    let gens = &w.generators;
    let in_m: Vec<usize> = (0..functors.len()).filter(|&k| w.contains_diagram(cat, &functors[k]).unwrap_or(true)).collect();
    let pairs: Vec<(usize, usize)> = (0..gens.len()).flat_map(|u| in_m.iter().map(move |&f| (u, f))).collect();
    let labels: Vec<String> = pairs.iter().map(|&(u, f)| format!("{},{}", gens[u].name, functors[f].name)).collect();
    let mut out = Vec::new();
    let p0 = pairs.clone();
    out.push(Check::new("acu.wb-0", labels.clone(), move |i| {
        let (u, f) = p0[i];
        Outcome::from_result((|| {
            let s = acu.star(&gens[u], &functors[f])?;
            Ok(Outcome::when(w.contains(cat, &s.value)?, || {
                Witness::new(format!("{}*{}", gens[u].name, functors[f].name), sizes(&s.value), "not in M")
                    .with_note("the pointwise colimit is not an object of M")
            }))
        })())
    }));
    let obj_pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    let cases = obj_pairs.iter().map(|&(a, b)| format!("{},{}", cat.objects[a], cat.objects[b])).collect();
    out.push(Check::new("acu.wb-1", cases, move |i| {
        let (a, b) = obj_pairs[i];
        Outcome::from_result((|| {
            let j = &acu.j;
            let homs = Obj::explicit("Nat", nat_set(cat, &j.at[a], &j.at[b])?)?;
            let arrows = cat.arrows_between(a, b);
            let names: Vec<&str> = arrows.iter().map(|&f| cat.arrows[f].name.as_str()).collect();
            let src = Obj::atoms(format!("C({},{})", cat.objects[a], cat.objects[b]), &names);
            let table = arrows.iter().map(|&f| nat_elem(&j.at[a], &j.maps[f])).collect::<Result<Vec<_>>>()?;
            let m = Mor::from_table(&src, &homs, table)?;
            Ok(bijective(&m, "J on arrows"))
        })())
    }));
    let gpairs: Vec<(usize, usize)> = (0..gens.len()).flat_map(|x| (0..gens.len()).map(move |y| (x, y))).collect();
    let cases = gpairs.iter().map(|&(x, y)| format!("{},{}", gens[x].name, gens[y].name)).collect();
    out.push(Check::new("acu.wb-2", cases, move |i| {
        let (x, y) = gpairs[i];
        Outcome::from_result((|| {
            let (px, py) = (&gens[x], &gens[y]);
            let src = Obj::explicit("Nat", nat_set(cat, px, py)?)?;
            let (lx, ly) = (acu.lower(px)?, acu.lower(py)?);
            let tgt = Obj::explicit("Nat*", nat_set(cat, &lx, &ly)?)?;
            let mut table = Vec::new();
            for alpha in src.elems()?.iter() {
                let comps = acu.lower_map(px, py, &nat_comps(px, py, alpha)?)?;
                table.push(nat_elem(&lx, &comps)?);
            }
            Ok(bijective(&Mor::from_table(&src, &tgt, table)?, "J_* on maps"))
        })())
    }));
    out.push(Check::new("acu.wb-3", labels, move |i| {
        let (u, f) = pairs[i];
        Outcome::from_result((|| {
            let cmp = acu.comparison(&gens[u], &functors[f])?;
            Ok(match first_non_iso(&cmp)? {
                None => Outcome::Pass,
                Some((d, class, w)) => Outcome::Fail(
                    w.unwrap_or_else(|| Witness::new("-", "-", "-"))
                        .with_note(format!("comparison at {} is {class}", cat.objects[d])),
                ),
            })
        })())
    }));
    out
}

fn bijective(m: &Mor, what: &str) -> Outcome {
    match classify(m) {
        Ok((Class::Iso, _)) => Outcome::Pass,
        Ok((class, w)) => Outcome::Fail(w.unwrap_or_else(|| Witness::new("-", "-", "-")).with_note(format!("{what} is {class}"))),
        Err(e) => Outcome::from_result(Err(e)),
    }
}

/// Verdicts of the four well-behavedness conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WellBehaved {
    pub wb: [bool; 4],
}

impl WellBehaved {
    pub fn from_reports(reps: &[CheckReport]) -> WellBehaved {
        let mut wb = [true; 4];
        for (k, slot) in wb.iter_mut().enumerate() {
            let id = format!("acu.wb-{k}");
            *slot = reps.iter().filter(|r| r.id == id).all(|r| r.status != Status::Fail);
        }
        WellBehaved { wb }
    }

    pub fn all(&self) -> bool {
        self.wb.iter().all(|&b| b)
    }
}

/// wb-1 ⟹ η iso, wb-2 ⟹ ε iso, wb-3 ⟹ γ iso, all ⟹ every component iso,
/// and, when `J` is well behaved, `J_*F ⊗ J_*G ≅ J_*(F⊗G)` through the
/// comparison, with the left side computed by the bimodule tensor.
pub fn monoidality_checks<'a>(acu: &'a Acu, bimod: &'a Acu, functors: &'a [Arc<Diagram>], wb: WellBehaved) -> Vec<Check<'a>> {
    let mut out = Vec::new();
    let implied = [(1usize, "eta", "acu.wb-1-eta-iso"), (2, "eps", "acu.wb-2-eps-iso"), (3, "gamma", "acu.wb-3-gamma-iso")];
    for (k, family, id) in implied {
        out.push(Check::single(id, acu.name(), move || {
            if !wb.wb[k] {
                return Outcome::Skip(format!("wb-{k} does not hold"));
            }
            let s = scan(acu, functors);
            match s.entries.iter().find(|e| e.family == family && e.class != Class::Iso) {
                None => Outcome::Pass,
                Some(e) => Outcome::Fail(
                    e.witness
                        .clone()
                        .unwrap_or_else(|| Witness::new("-", "-", "-"))
                        .with_note(format!("{family} at {} is {}", e.at.join(","), e.class)),
                ),
            }
        }));
    }
    out.push(Check::single("acu.monoidal", acu.name(), move || {
        if !wb.all() {
            return Outcome::Skip("J is not well behaved".into());
        }
        let s = scan(acu, functors);
        match s.entries.iter().find(|e| e.class != Class::Iso) {
            None => Outcome::Pass,
            Some(e) => Outcome::Fail(Witness::new(e.at.join(","), e.class, "iso").with_note(format!("{} is not invertible", e.family))),
        }
    }));
    let pairs: Vec<(usize, usize)> = (0..functors.len()).flat_map(|f| (0..functors.len()).map(move |g| (f, g))).collect();
    let cases = pairs.iter().map(|&(f, g)| format!("{},{}", functors[f].name, functors[g].name)).collect();
    out.push(Check::new("acu.strong-J*", cases, move |i| {
        if !wb.all() {
            return Outcome::Skip("J is not well behaved".into());
        }
        let (f, g) = pairs[i];
        Outcome::from_result((|| {
            let cat = &acu.cat;
            let (ff, gg) = (&functors[f], &functors[g]);
            let lf = Arc::new(acu.lower_diagram(ff)?);
            let lg = Arc::new(acu.lower_diagram(gg)?);
            let lhs = bimod.tensor(&lf, &lg)?;
            let fg = acu.tensor(ff, gg)?;
            for c in 0..cat.objects.len() {
                let cmp = acu.comparison(&*acu.lower(&ff.at[c])?, gg)?;
                let target = acu.lower(&fg.at[c])?;
                for d in 0..cat.objects.len() {
                    let (dom, cod) = (&lhs.at[c].values[d], &target.values[d]);
                    if dom.size() != cmp[d].dom().size() || cod.size() != cmp[d].cod().size() {
                        return Ok(Outcome::Fail(Witness::new(
                            format!("{},{}", cat.objects[c], cat.objects[d]),
                            format!("{} -> {}", dom.size(), cod.size()),
                            format!("{} -> {}", cmp[d].dom().size(), cmp[d].cod().size()),
                        )));
                    }
                }
                if let Some((d, class, w)) = first_non_iso(&cmp)? {
                    return Ok(Outcome::Fail(
                        w.unwrap_or_else(|| Witness::new("-", "-", "-"))
                            .with_note(format!("J_*F.J_*G -> J_*(F.G) at {},{} is {class}", cat.objects[c], cat.objects[d])),
                    ));
                }
            }
            Ok(Outcome::Pass)
        })())
    }));
    out
}

/// A small functor universe: `J`, the Yoneda embedding, the constant
/// diagrams at the empty and one-point presheaves and at the given
/// presheaves, without repeated names.
pub fn functor_universe(cat: &SmallCategory, j: &Diagram, consts: &[SetFunctor]) -> Vec<Arc<Diagram>> {
    let mut out = vec![Arc::new(j.clone())];
    if j.name != "Y" {
        out.push(Arc::new(Diagram::yoneda(cat)));
    }
    let mut ps = vec![initial(cat), terminal(cat)];
    ps.extend(consts.iter().cloned());
    for p in ps {
        let name = format!("K{}", p.name);
        if out.iter().all(|d| d.name != name) {
            out.push(Arc::new(Diagram::constant(cat, &p, name)));
        }
    }
    out
}
