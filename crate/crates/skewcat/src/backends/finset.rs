//! Finite sets with structured elements.
//!
//! Elements carry their own construction history (pairs, function tables),
//! so a morphism like `(f, (g, n)) -> (r -> (f, g r), n)` can be written as
//! an ordinary closure and evaluated pointwise. Objects are symbolic
//! descriptions that enumerate lazily; only the domain of a morphism ever
//! has to be enumerated to decide equality.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::limits;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Atom(Arc<str>),
    Pair(Arc<(Elem, Elem)>),
    /// A function table, indexed by the enumeration order of its domain.
    Fun(Arc<[Elem]>),
}

impl Elem {
    pub fn atom(s: &str) -> Elem {
        Elem::Atom(Arc::from(s))
    }

    pub fn pair(a: Elem, b: Elem) -> Elem {
        Elem::Pair(Arc::new((a, b)))
    }

    pub fn fun(v: Vec<Elem>) -> Elem {
        Elem::Fun(Arc::from(v))
    }

    /// Panics unless `self` is a pair; callers only use it on elements of
    /// product objects.
    pub fn fst(&self) -> &Elem {
        match self {
            Elem::Pair(p) => &p.0,
            other => panic!("expected a pair, got {other}"),
        }
    }

    pub fn snd(&self) -> &Elem {
        match self {
            Elem::Pair(p) => &p.1,
            other => panic!("expected a pair, got {other}"),
        }
    }

    pub fn table(&self) -> &[Elem] {
        match self {
            Elem::Fun(t) => t,
            other => panic!("expected a function table, got {other}"),
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Atom(s) => write!(f, "{s}"),
            Elem::Pair(p) => write!(f, "({},{})", p.0, p.1),
            Elem::Fun(t) => {
                write!(f, "[")?;
                for (i, x) in t.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "]")
            }
        }
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone)]
pub enum Kind {
    Explicit(Arc<Vec<Elem>>),
    Product(Obj, Obj),
    /// All functions from the first object to the second.
    Hom(Obj, Obj),
    /// Tagged disjoint union; elements are `(tag, x)`.
    Sum(Arc<Vec<(Elem, Obj)>>),
}

struct Inner {
    name: String,
    kind: Kind,
    size: Option<usize>,
    elems: OnceLock<std::result::Result<Arc<Vec<Elem>>, Error>>,
    index: OnceLock<HashMap<Elem, usize>>,
}

/// A finite set. Cheap to clone.
#[derive(Clone)]
pub struct Obj(Arc<Inner>);

impl Obj {
    fn build(name: String, kind: Kind) -> Obj {
        let size = match &kind {
            Kind::Explicit(v) => Some(v.len()),
            Kind::Product(a, b) => a.size_opt().zip(b.size_opt()).and_then(|(x, y)| x.checked_mul(y)),
            Kind::Hom(a, b) => match (a.size_opt(), b.size_opt()) {
                (Some(x), Some(y)) => u32::try_from(x).ok().and_then(|x| y.checked_pow(x)),
                _ => None,
            },
            Kind::Sum(parts) => parts
                .iter()
                .try_fold(0usize, |acc, (_, o)| o.size_opt().and_then(|s| acc.checked_add(s))),
        };
        Obj(Arc::new(Inner {
            name,
            kind,
            size,
            elems: OnceLock::new(),
            index: OnceLock::new(),
        }))
    }

    /// An explicit set. Duplicate elements are rejected.
    pub fn explicit(name: impl Into<String>, elems: Vec<Elem>) -> Result<Obj> {
        let name = name.into();
        let mut seen = std::collections::HashSet::new();
        for e in &elems {
            if !seen.insert(e.clone()) {
                return Err(Error::input(format!("duplicate element {e} in {name}")));
            }
        }
        Ok(Obj::build(name, Kind::Explicit(Arc::new(elems))))
    }

    /// A set of atoms with the given labels.
    pub fn atoms(name: impl Into<String>, labels: &[&str]) -> Obj {
        Obj::explicit(name, labels.iter().map(|l| Elem::atom(l)).collect())
            .expect("atom labels must be distinct")
    }

    /// The set `{0, .., n-1}` named after its size.
    pub fn range(n: usize) -> Obj {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        Obj::atoms(format!("#{n}"), &refs)
    }

    pub fn point() -> Obj {
        Obj::atoms("1", &["*"])
    }

    pub fn empty() -> Obj {
        Obj::atoms("0", &[])
    }

    pub fn product(a: &Obj, b: &Obj) -> Obj {
        Obj::product_named(a, b, format!("({}x{})", a.name(), b.name()))
    }

    pub fn product_named(a: &Obj, b: &Obj, name: impl Into<String>) -> Obj {
        Obj::build(name.into(), Kind::Product(a.clone(), b.clone()))
    }

    pub fn hom(a: &Obj, b: &Obj) -> Obj {
        Obj::build(format!("[{},{}]", a.name(), b.name()), Kind::Hom(a.clone(), b.clone()))
    }

    pub fn sum(name: impl Into<String>, parts: Vec<(Elem, Obj)>) -> Obj {
        Obj::build(name.into(), Kind::Sum(Arc::new(parts)))
    }

    /// Same set, different display name.
    pub fn renamed(&self, name: impl Into<String>) -> Obj {
        Obj::build(name.into(), self.0.kind.clone())
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn kind(&self) -> &Kind {
        &self.0.kind
    }

    fn size_opt(&self) -> Option<usize> {
        self.0.size
    }

    /// Cardinality; `usize::MAX` if it overflows.
    pub fn size(&self) -> usize {
        self.0.size.unwrap_or(usize::MAX)
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// All elements in canonical order. Hom objects larger than the hom cap
    /// refuse to enumerate.
    pub fn elems(&self) -> Result<Arc<Vec<Elem>>> {
        self.0.elems.get_or_init(|| self.enumerate()).clone()
    }

    fn enumerate(&self) -> std::result::Result<Arc<Vec<Elem>>, Error> {
        match &self.0.kind {
            Kind::Explicit(v) => Ok(v.clone()),
            Kind::Product(a, b) => {
                let (xa, xb) = (a.elems()?, b.elems()?);
                let mut out = Vec::with_capacity(xa.len() * xb.len());
                for x in xa.iter() {
                    for y in xb.iter() {
                        out.push(Elem::pair(x.clone(), y.clone()));
                    }
                }
                Ok(Arc::new(out))
            }
            Kind::Hom(a, b) => {
                let cap = limits::max_hom();
                match self.0.size {
                    Some(s) if s <= cap => {}
                    _ => {
                        return Err(Error::Cap(format!(
                            "hom set {} has {} elements, cap is {cap}",
                            self.name(),
                            self.0.size.map_or("too many".to_string(), |s| s.to_string())
                        )))
                    }
                }
                let (xa, xb) = (a.elems()?, b.elems()?);
                let n = xa.len();
                let m = xb.len();
                let mut out = Vec::new();
                if n > 0 && m == 0 {
                    return Ok(Arc::new(out));
                }
                let mut digits = vec![0usize; n];
                loop {
                    out.push(Elem::fun(digits.iter().map(|&d| xb[d].clone()).collect()));
                    // odometer, last position fastest
                    let mut i = n;
                    loop {
                        if i == 0 {
                            return Ok(Arc::new(out));
                        }
                        i -= 1;
                        digits[i] += 1;
                        if digits[i] < m {
                            break;
                        }
                        digits[i] = 0;
                    }
                }
            }
            Kind::Sum(parts) => {
                let mut out = Vec::new();
                for (tag, o) in parts.iter() {
                    for x in o.elems()?.iter() {
                        out.push(Elem::pair(tag.clone(), x.clone()));
                    }
                }
                Ok(Arc::new(out))
            }
        }
    }

    /// Position of `e` in the canonical enumeration, computed without
    /// enumerating product and hom objects.
    pub fn index_of(&self, e: &Elem) -> Option<usize> {
        match &self.0.kind {
            Kind::Explicit(_) => {
                let idx = self.0.index.get_or_init(|| {
                    let v = self.elems().expect("explicit objects always enumerate");
                    v.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect()
                });
                idx.get(e).copied()
            }
            Kind::Product(a, b) => match e {
                Elem::Pair(p) => {
                    let i = a.index_of(&p.0)?;
                    let j = b.index_of(&p.1)?;
                    Some(i * b.size() + j)
                }
                _ => None,
            },
            Kind::Hom(a, b) => match e {
                Elem::Fun(t) if t.len() == a.size() => {
                    let m = b.size();
                    t.iter().try_fold(0usize, |acc, x| Some(acc * m + b.index_of(x)?))
                }
                _ => None,
            },
            Kind::Sum(parts) => match e {
                Elem::Pair(p) => {
                    let mut offset = 0;
                    for (tag, o) in parts.iter() {
                        if *tag == p.0 {
                            return o.index_of(&p.1).map(|i| offset + i);
                        }
                        offset += o.size();
                    }
                    None
                }
                _ => None,
            },
        }
    }

    pub fn contains(&self, e: &Elem) -> bool {
        self.index_of(e).is_some()
    }

    /// The element whose display string is `s`, if any.
    pub fn find_display(&self, s: &str) -> Result<Option<Elem>> {
        Ok(self.elems()?.iter().find(|e| e.to_string() == s).cloned())
    }

    /// For a hom object, the underlying pair of objects.
    pub fn hom_parts(&self) -> Option<(&Obj, &Obj)> {
        match &self.0.kind {
            Kind::Hom(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn product_parts(&self) -> Option<(&Obj, &Obj)> {
        match &self.0.kind {
            Kind::Product(a, b) => Some((a, b)),
            _ => None,
        }
    }

    /// Structural equality of descriptors; names are ignored.
    pub fn same(&self, other: &Obj) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        if self.0.size != other.0.size {
            return false;
        }
        match (&self.0.kind, &other.0.kind) {
            (Kind::Explicit(a), Kind::Explicit(b)) => a == b,
            (Kind::Product(a1, b1), Kind::Product(a2, b2)) => a1.same(a2) && b1.same(b2),
            (Kind::Hom(a1, b1), Kind::Hom(a2, b2)) => a1.same(a2) && b1.same(b2),
            (Kind::Sum(p), Kind::Sum(q)) => {
                p.len() == q.len() && p.iter().zip(q.iter()).all(|((t1, o1), (t2, o2))| t1 == t2 && o1.same(o2))
            }
            _ => match (self.elems(), other.elems()) {
                (Ok(a), Ok(b)) => a == b,
                _ => false,
            },
        }
    }
}

impl PartialEq for Obj {
    fn eq(&self, other: &Obj) -> bool {
        self.same(other)
    }
}

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.name)
    }
}

impl fmt::Debug for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.name)
    }
}

type Func = Arc<dyn Fn(&Elem) -> Elem + Send + Sync>;

/// A function between finite sets, given as a procedure.
#[derive(Clone)]
pub struct Mor {
    dom: Obj,
    cod: Obj,
    f: Func,
}

impl Mor {
    pub fn new(dom: &Obj, cod: &Obj, f: impl Fn(&Elem) -> Elem + Send + Sync + 'static) -> Mor {
        Mor {
            dom: dom.clone(),
            cod: cod.clone(),
            f: Arc::new(f),
        }
    }

    pub fn id(o: &Obj) -> Mor {
        Mor::new(o, o, |x| x.clone())
    }

    /// A morphism from an explicit output table in domain order.
    pub fn from_table(dom: &Obj, cod: &Obj, table: Vec<Elem>) -> Result<Mor> {
        if table.len() != dom.size() {
            return Err(Error::input(format!(
                "table for {dom} -> {cod} has {} entries, expected {}",
                table.len(),
                dom.size()
            )));
        }
        if let Some(bad) = table.iter().find(|y| !cod.contains(y)) {
            return Err(Error::input(format!("value {bad} is not in {cod}")));
        }
        let d = dom.clone();
        Ok(Mor::new(dom, cod, move |x| {
            table[d.index_of(x).unwrap_or_else(|| panic!("{x} is not in {d}"))].clone()
        }))
    }

    /// Materialize into a lookup table; worthwhile before repeated use of a
    /// long chain of composites.
    pub fn tabulate(&self) -> Result<Mor> {
        let table = self.table()?;
        let d = self.dom.clone();
        Ok(Mor::new(&self.dom, &self.cod, move |x| {
            table[d.index_of(x).unwrap_or_else(|| panic!("{x} is not in {d}"))].clone()
        }))
    }

    pub fn dom(&self) -> &Obj {
        &self.dom
    }

    pub fn cod(&self) -> &Obj {
        &self.cod
    }

    pub fn apply(&self, x: &Elem) -> Elem {
        (self.f)(x)
    }

    /// `self ∘ f`. Panics on a type mismatch, which is always an engine bug.
    pub fn after(&self, f: &Mor) -> Mor {
        assert!(
            f.cod.same(&self.dom),
            "cannot compose {} -> {} after {} -> {}",
            self.dom,
            self.cod,
            f.dom,
            f.cod
        );
        let (g, h) = (self.f.clone(), f.f.clone());
        Mor {
            dom: f.dom.clone(),
            cod: self.cod.clone(),
            f: Arc::new(move |x| g(&h(x))),
        }
    }

    /// Checked composition `self ∘ f`.
    pub fn try_after(&self, f: &Mor) -> Result<Mor> {
        if !f.cod.same(&self.dom) {
            return Err(Error::input(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.dom, self.cod, f.dom, f.cod
            )));
        }
        Ok(self.after(f))
    }

    /// Same function, retyped to a different but equal codomain or domain.
    pub fn retype(&self, dom: &Obj, cod: &Obj) -> Mor {
        Mor {
            dom: dom.clone(),
            cod: cod.clone(),
            f: self.f.clone(),
        }
    }

    pub fn table(&self) -> Result<Vec<Elem>> {
        Ok(self.dom.elems()?.iter().map(|x| self.apply(x)).collect())
    }

    /// First domain element where the two maps disagree.
    pub fn first_difference(&self, other: &Mor) -> Result<Option<(Elem, Elem, Elem)>> {
        for x in self.dom.elems()?.iter() {
            let (a, b) = (self.apply(x), other.apply(x));
            if a != b {
                return Ok(Some((x.clone(), a, b)));
            }
        }
        Ok(None)
    }

    pub fn equals(&self, other: &Mor) -> Result<bool> {
        Ok(self.first_difference(other)?.is_none())
    }

    /// First domain element whose image lies outside the codomain.
    pub fn first_stray(&self) -> Result<Option<(Elem, Elem)>> {
        for x in self.dom.elems()?.iter() {
            let y = self.apply(x);
            if !self.cod.contains(&y) {
                return Ok(Some((x.clone(), y)));
            }
        }
        Ok(None)
    }

    /// Two distinct inputs with the same image, if any.
    pub fn collision(&self) -> Result<Option<(Elem, Elem, Elem)>> {
        let mut seen: HashMap<Elem, Elem> = HashMap::new();
        for x in self.dom.elems()?.iter() {
            let y = self.apply(x);
            if let Some(prev) = seen.get(&y) {
                return Ok(Some((prev.clone(), x.clone(), y)));
            }
            seen.insert(y, x.clone());
        }
        Ok(None)
    }

    /// A codomain element not in the image, if any.
    pub fn missed(&self) -> Result<Option<Elem>> {
        let image: std::collections::HashSet<Elem> = self.dom.elems()?.iter().map(|x| self.apply(x)).collect();
        Ok(self.cod.elems()?.iter().find(|y| !image.contains(*y)).cloned())
    }

    pub fn is_injective(&self) -> Result<bool> {
        Ok(self.collision()?.is_none())
    }

    pub fn is_surjective(&self) -> Result<bool> {
        Ok(self.missed()?.is_none())
    }

    /// Replace the value at one input. Used to corrupt components on purpose.
    pub fn patched(&self, input: Elem, output: Elem) -> Mor {
        let f = self.f.clone();
        Mor {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            f: Arc::new(move |x| if *x == input { output.clone() } else { f(x) }),
        }
    }

    /// Inverse of a bijection, or `None`.
    pub fn inverse(&self) -> Result<Option<Mor>> {
        if self.dom.size() != self.cod.size() || !self.is_injective()? || !self.is_surjective()? {
            return Ok(None);
        }
        let back: HashMap<Elem, Elem> = self.dom.elems()?.iter().map(|x| (self.apply(x), x.clone())).collect();
        Ok(Some(Mor::new(&self.cod, &self.dom, move |y| back[y].clone())))
    }
}

impl fmt::Debug for Mor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.dom, self.cod)?;
        if let Ok(t) = self.table() {
            if t.len() <= 16 {
                write!(f, " {t:?}")?;
            }
        }
        Ok(())
    }
}

/// Apply a function table (an element of a hom object) to a domain element.
pub fn eval_fun(dom: &Obj, f: &Elem, x: &Elem) -> Elem {
    let i = dom.index_of(x).unwrap_or_else(|| panic!("{x} is not in {dom}"));
    f.table()[i].clone()
}

/// Compose two function tables: `g ∘ f` where `f: a -> b`.
pub fn compose_fun(b: &Obj, g: &Elem, f: &Elem) -> Elem {
    Elem::fun(f.table().iter().map(|y| eval_fun(b, g, y)).collect())
}

/// The function table of `h ∘ f` for a morphism `h` and a table `f`.
pub fn post_fun(h: &Mor, f: &Elem) -> Elem {
    Elem::fun(f.table().iter().map(|y| h.apply(y)).collect())
}

/// The function table of the identity on `a`.
pub fn id_fun(a: &Obj) -> Result<Elem> {
    Ok(Elem::fun(a.elems()?.to_vec()))
}

/// Every morphism `a -> b`, in canonical order.
pub fn hom_set(a: &Obj, b: &Obj) -> Result<Vec<Mor>> {
    let h = Obj::hom(a, b);
    let elems = h.elems()?;
    Ok(elems.iter().map(|f| fun_to_mor(a, b, f)).collect())
}

/// View a function table as a morphism.
pub fn fun_to_mor(a: &Obj, b: &Obj, f: &Elem) -> Mor {
    let (a2, f2) = (a.clone(), f.clone());
    Mor::new(a, b, move |x| eval_fun(&a2, &f2, x))
}

/// The function table of a morphism.
pub fn mor_to_fun(m: &Mor) -> Result<Elem> {
    Ok(Elem::fun(m.table()?))
}

/// Product of morphisms `f x g`.
pub fn product_mor(f: &Mor, g: &Mor) -> Mor {
    let dom = Obj::product(f.dom(), g.dom());
    let cod = Obj::product(f.cod(), g.cod());
    let (f, g) = (f.clone(), g.clone());
    Mor::new(&dom, &cod, move |x| Elem::pair(f.apply(x.fst()), g.apply(x.snd())))
}

/// Product of morphisms into given product objects (keeps their names).
pub fn product_mor_on(dom: &Obj, cod: &Obj, f: &Mor, g: &Mor) -> Mor {
    let (f, g) = (f.clone(), g.clone());
    Mor::new(dom, cod, move |x| Elem::pair(f.apply(x.fst()), g.apply(x.snd())))
}

impl Elem {
    /// Parse the display form back into an element: atoms, `(a,b)` pairs
    /// and `[x,y,..]` tables.
    pub fn parse(s: &str) -> Result<Elem> {
        let mut p = Parser { s: s.as_bytes(), i: 0 };
        let e = p.elem()?;
        if p.i != p.s.len() {
            return Err(Error::input(format!("trailing input in element {s:?}")));
        }
        Ok(e)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn bad(&self) -> Error {
        Error::input(format!(
            "malformed element {:?} at offset {}",
            String::from_utf8_lossy(self.s),
            self.i
        ))
    }

    fn eat(&mut self, c: u8) -> Result<()> {
        if self.s.get(self.i) == Some(&c) {
            self.i += 1;
            Ok(())
        } else {
            Err(self.bad())
        }
    }

    fn elem(&mut self) -> Result<Elem> {
        match self.s.get(self.i) {
            Some(b'(') => {
                self.i += 1;
                let a = self.elem()?;
                self.eat(b',')?;
                let b = self.elem()?;
                self.eat(b')')?;
                Ok(Elem::pair(a, b))
            }
            Some(b'[') => {
                self.i += 1;
                let mut v = Vec::new();
                if self.s.get(self.i) == Some(&b']') {
                    self.i += 1;
                    return Ok(Elem::fun(v));
                }
                loop {
                    v.push(self.elem()?);
                    match self.s.get(self.i) {
                        Some(b',') => self.i += 1,
                        Some(b']') => {
                            self.i += 1;
                            return Ok(Elem::fun(v));
                        }
                        _ => return Err(self.bad()),
                    }
                }
            }
            _ => {
                let start = self.i;
                while let Some(c) = self.s.get(self.i) {
                    if matches!(c, b'(' | b')' | b'[' | b']' | b',') {
                        break;
                    }
                    self.i += 1;
                }
                if start == self.i {
                    return Err(self.bad());
                }
                Ok(Elem::atom(std::str::from_utf8(&self.s[start..self.i]).map_err(|_| self.bad())?))
            }
        }
    }
}
