//! Coequalizers of finite sets by union-find, with the minimum-index
//! element of each class as its canonical representative. The quotient's
//! elements are those representatives, so factoring a map through the
//! projection is just restriction.

use std::collections::HashMap;

use petgraph::unionfind::UnionFind;

use super::finset::{Elem, Mor, Obj};
use crate::cat::Witness;
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Coeq {
    /// The parallel pairs that were coequalized.
    pub pairs: Vec<(Mor, Mor)>,
    /// The quotient object.
    pub obj: Obj,
    /// The projection onto the quotient.
    pub proj: Mor,
    /// Whether the pairs share a common section, when one was supplied.
    pub reflexive: Option<bool>,
}

impl Coeq {
    /// Coequalizer of one parallel pair.
    pub fn of(f: &Mor, g: &Mor, name: impl Into<String>) -> Result<Coeq> {
        if !f.dom().same(g.dom()) || !f.cod().same(g.cod()) {
            return Err(Error::input(format!(
                "not a parallel pair: {} -> {} and {} -> {}",
                f.dom(),
                f.cod(),
                g.dom(),
                g.cod()
            )));
        }
        Coeq::joint(f.cod(), vec![(f.clone(), g.clone())], name)
    }

    /// Joint coequalizer of several pairs into the same object.
    pub fn joint(cod: &Obj, pairs: Vec<(Mor, Mor)>, name: impl Into<String>) -> Result<Coeq> {
        let elems = cod.elems()?;
        let mut uf = UnionFind::<usize>::new(elems.len());
        for (f, g) in &pairs {
            if !f.cod().same(cod) || !g.cod().same(cod) || !f.dom().same(g.dom()) {
                return Err(Error::input(format!("pair {} -> {} does not land in {cod}", f.dom(), f.cod())));
            }
            for x in f.dom().elems()?.iter() {
                let (a, b) = (f.apply(x), g.apply(x));
                let ia = cod.index_of(&a).ok_or_else(|| Error::input(format!("{a} is not in {cod}")))?;
                let ib = cod.index_of(&b).ok_or_else(|| Error::input(format!("{b} is not in {cod}")))?;
                uf.union(ia, ib);
            }
        }
        Ok(Coeq::from_classes(cod, &elems, |i| uf.find(i), pairs, name.into()))
    }

    fn from_classes(cod: &Obj, elems: &[Elem], root: impl Fn(usize) -> usize, pairs: Vec<(Mor, Mor)>, name: String) -> Coeq {
        // minimum index per class is the first index seen with that root
        let mut rep_of_root: HashMap<usize, usize> = HashMap::new();
        let mut reps = Vec::new();
        let mut rep_index = vec![0usize; elems.len()];
        for (i, slot) in rep_index.iter_mut().enumerate() {
            let r = root(i);
            let rep = *rep_of_root.entry(r).or_insert_with(|| {
                reps.push(elems[i].clone());
                i
            });
            *slot = rep;
        }
        let obj = Obj::explicit(name, reps).expect("representatives are distinct");
        let table: Vec<Elem> = rep_index.iter().map(|&i| elems[i].clone()).collect();
        let c = cod.clone();
        let proj = Mor::new(cod, &obj, move |x| {
            table[c.index_of(x).unwrap_or_else(|| panic!("{x} is not in {c}"))].clone()
        });
        Coeq {
            pairs,
            obj,
            proj,
            reflexive: None,
        }
    }

    /// The quotient of `cod` by the kernel of `p`; its classes are the
    /// fibres of `p`.
    pub fn of_kernel(p: &Mor, name: impl Into<String>) -> Result<Coeq> {
        let elems = p.dom().elems()?;
        let mut first: HashMap<Elem, usize> = HashMap::new();
        let roots: Vec<usize> = elems
            .iter()
            .enumerate()
            .map(|(i, x)| *first.entry(p.apply(x)).or_insert(i))
            .collect();
        Ok(Coeq::from_classes(p.dom(), &elems, |i| roots[i], Vec::new(), name.into()))
    }

    /// Record whether `s` is a common section of every pair.
    pub fn check_section(mut self, s: &Mor) -> Result<Coeq> {
        let mut ok = true;
        for (f, g) in &self.pairs {
            ok &= f.after(s).equals(&Mor::id(s.dom()))? && g.after(s).equals(&Mor::id(s.dom()))?;
        }
        self.reflexive = Some(ok);
        Ok(self)
    }

    /// The unique `h'` with `h' ∘ proj = h`. Fails with a witness when `h`
    /// does not coequalize the pairs.
    pub fn factor(&self, h: &Mor) -> Result<Mor> {
        if !h.dom().same(self.proj.dom()) {
            return Err(Error::input(format!(
                "cannot factor a map out of {} through a quotient of {}",
                h.dom(),
                self.proj.dom()
            )));
        }
        if self.pairs.is_empty() {
            return factor_through(&self.proj, h);
        }
        for (f, g) in &self.pairs {
            for x in f.dom().elems()?.iter() {
                let (a, b) = (h.apply(&f.apply(x)), h.apply(&g.apply(x)));
                if a != b {
                    return Err(Error::structural_at(
                        format!("map out of {} does not coequalize the pair", h.dom()),
                        Witness::new(x, a, b),
                    ));
                }
            }
        }
        Ok(h.retype(&self.obj, h.cod()).tabulate()?)
    }

    /// Class of every element of the source, as representative.
    pub fn classes(&self) -> Result<Vec<(Elem, Elem)>> {
        Ok(self.proj.dom().elems()?.iter().map(|x| (x.clone(), self.proj.apply(x))).collect())
    }

    /// Whether two quotients of the same object have the same classes.
    pub fn same_partition(&self, other: &Coeq) -> Result<Option<(Elem, Elem)>> {
        same_kernel(&self.proj, &other.proj)
    }
}

/// Two maps out of the same object with the same kernel; otherwise a pair
/// of elements identified by exactly one of them.
pub fn same_kernel(p: &Mor, q: &Mor) -> Result<Option<(Elem, Elem)>> {
    let mut by_p: HashMap<Elem, Elem> = HashMap::new();
    let mut by_q: HashMap<Elem, Elem> = HashMap::new();
    for x in p.dom().elems()?.iter() {
        let (a, b) = (p.apply(x), q.apply(x));
        let xp = by_p.entry(a).or_insert_with(|| x.clone()).clone();
        let xq = by_q.entry(b).or_insert_with(|| x.clone()).clone();
        if xp != xq {
            return Ok(Some((xp, x.clone())));
        }
    }
    Ok(None)
}

/// Factor `h` through a surjection `p` with the same domain: the unique `k`
/// with `k ∘ p = h`. Fails if `p` misses a point or `h` is not constant on
/// a fibre of `p`.
pub fn factor_through(p: &Mor, h: &Mor) -> Result<Mor> {
    if !p.dom().same(h.dom()) {
        return Err(Error::input(format!("{} and {} have different domains", p.dom(), h.dom())));
    }
    let mut table: HashMap<Elem, (Elem, Elem)> = HashMap::new();
    for x in p.dom().elems()?.iter() {
        let (y, v) = (p.apply(x), h.apply(x));
        match table.get(&y) {
            Some((x0, v0)) if *v0 != v => {
                return Err(Error::structural_at(
                    format!("map out of {} is not constant on the fibre over {y}", h.dom()),
                    Witness::new(format!("{x0} ~ {x}"), v0, v),
                ))
            }
            Some(_) => {}
            None => {
                table.insert(y, (x.clone(), v));
            }
        }
    }
    if let Some(y) = p.cod().elems()?.iter().find(|y| !table.contains_key(*y)) {
        return Err(Error::structural_at(
            format!("projection onto {} is not surjective", p.cod()),
            Witness::new(y, "-", "-").with_note("point not in the image"),
        ));
    }
    let out: HashMap<Elem, Elem> = table.into_iter().map(|(k, (_, v))| (k, v)).collect();
    Mor::new(p.cod(), h.cod(), move |y| out[y].clone()).tabulate()
}

/// Check the split-fork equations `e∘f = e∘g`, `e∘s = 1`, `f∘t = 1`,
/// `g∘t = s∘e` for `f, g: A ⇉ B`, `e: B -> C`, `s: C -> B`, `t: B -> A`.
pub fn check_split_fork(f: &Mor, g: &Mor, e: &Mor, s: &Mor, t: &Mor) -> Result<Option<Witness>> {
    let checks: [(Mor, Mor, &str); 4] = [
        (e.after(f), e.after(g), "e f = e g"),
        (e.after(s), Mor::id(e.cod()), "e s = 1"),
        (f.after(t), Mor::id(f.cod()), "f t = 1"),
        (g.after(t), s.after(e), "g t = s e"),
    ];
    for (l, r, what) in checks {
        if let Some((x, a, b)) = l.first_difference(&r)? {
            return Ok(Some(Witness::new(x, a, b).with_note(what)));
        }
    }
    Ok(None)
}
