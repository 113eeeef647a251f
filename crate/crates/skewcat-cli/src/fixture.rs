//! Fixture documents: which backend and structure to build, over which
//! universe, and which suites to run.

use std::collections::BTreeSet;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use skewcat::backends::coend::SmallCategory;
use skewcat::backends::finset::Obj;
use skewcat::limits::Caps;
use skewcat::mutate::Mutation;

pub const SUITES: &[&str] = &[
    "smc", "strengths", "em", "smp2", "underlying", "forg", "cocomp", "acu", "smpq", "barphi", "lift",
];

/// Suites that only make sense over finite sets with a set-level skew
/// structure (cartesian, dot or custom).
const SET_SUITES: &[&str] = &["smc", "strengths", "em", "smp2", "underlying", "forg", "smpq", "barphi", "lift"];

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureDoc {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub backend: Backend,
    pub structure: Structure,
    #[serde(default)]
    pub universe: Universe,
    pub suites: Vec<String>,
    /// Small category and unit functor for the acu and cocomp suites when
    /// the structure itself is not an acu structure.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub acu: Option<AcuSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub mutations: Vec<Mutation>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum Backend {
    Finset,
    Finvec { prime: i64 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum Structure {
    Cartesian,
    Dot {
        r: Vec<String>,
    },
    Acu(AcuSpec),
    /// Cartesian (no `r`) or dot structure with some component tables
    /// overridden entry by entry.
    Custom {
        #[serde(default)]
        r: Option<Vec<String>>,
        tables: Vec<Table>,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Table {
    pub family: String,
    #[serde(default)]
    pub at: Vec<String>,
    /// `[input, output]` pairs.
    pub entries: Vec<[String; 2]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AcuSpec {
    pub category: CategorySpec,
    #[serde(default)]
    pub j: JSpec,
    #[serde(default)]
    pub w: WSpec,
}

impl Default for AcuSpec {
    fn default() -> Self {
        AcuSpec {
            category: CategorySpec::Trivial,
            j: JSpec::Yoneda,
            w: WSpec::All,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum CategorySpec {
    Trivial,
    WalkingArrow,
    /// The one-object category `End(R)`.
    Endomorphisms { r: Vec<String> },
}

impl CategorySpec {
    pub fn build(&self) -> Result<SmallCategory> {
        Ok(match self {
            CategorySpec::Trivial => SmallCategory::trivial(),
            CategorySpec::WalkingArrow => SmallCategory::walking_arrow(),
            CategorySpec::Endomorphisms { r } => SmallCategory::endomorphisms(&atoms("R", r))?,
        })
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum JSpec {
    #[default]
    Yoneda,
    /// Every object sent to the representable at `object`.
    Collapsed { object: String },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WSpec {
    #[default]
    All,
    RankOne,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Universe {
    /// Generate `S0..Sn` with `Sk` of size `k`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sets: Option<i64>,
    /// Explicit objects; replaces `sets`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub objects: Vec<ObjSpec>,
    /// Largest plain object used by the module-category suites.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub em_max: Option<i64>,
    /// Largest carrier of the algebra and E-object universes.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra_max: Option<i64>,
    /// Largest presheaf value for the acu and cocomp suites.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub presheaf_max: Option<i64>,
    /// Indices into the presheaf iso classes used as constant functors.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub constants: Vec<i64>,
    /// Indices into the presheaf iso classes, one per object of C; every
    /// diagram with these values is used.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub diagram_values: Vec<i64>,
    /// finvec: weight dimensions, diagram dimensions, and the membership
    /// bound (spaces of dimension below it).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub dims: Vec<i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub diagram_dims: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim_bound: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub caps: Option<CapSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjSpec {
    pub name: String,
    pub elems: Vec<String>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CapSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_set: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_dim: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_hom: Option<i64>,
}

fn atoms(name: &str, labels: &[String]) -> Obj {
    let ls: Vec<&str> = labels.iter().map(String::as_str).collect();
    Obj::atoms(name, &ls)
}

const LETTERS: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];

fn positive(what: &str, v: i64) -> Result<usize> {
    if v <= 0 {
        bail!("{what} must be positive, got {v}");
    }
    Ok(v as usize)
}

fn non_negative(what: &str, v: i64) -> Result<usize> {
    if v < 0 {
        bail!("{what} must be non-negative, got {v}");
    }
    Ok(v as usize)
}

fn distinct<'a>(what: &str, xs: impl IntoIterator<Item = &'a String>) -> Result<()> {
    let mut seen = BTreeSet::new();
    for x in xs {
        if !seen.insert(x) {
            bail!("{what}: {x:?} appears twice");
        }
    }
    Ok(())
}

impl FixtureDoc {
    pub fn load(path: &Path) -> Result<FixtureDoc> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        FixtureDoc::parse(&text).with_context(|| format!("in {}", path.display()))
    }

    pub fn parse(text: &str) -> Result<FixtureDoc> {
        let doc: FixtureDoc = serde_json::from_str(text).context("not a valid fixture document")?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn is_finvec(&self) -> bool {
        matches!(self.backend, Backend::Finvec { .. })
    }

    /// Schema-level checks that serde cannot express.
    pub fn validate(&self) -> Result<()> {
        for s in &self.suites {
            if !SUITES.contains(&s.as_str()) {
                bail!("unknown suite {s:?} (known: {})", SUITES.join(", "));
            }
        }
        distinct("suites", &self.suites)?;
        match &self.backend {
            Backend::Finset => {}
            Backend::Finvec { prime } => {
                let p = u32::try_from(*prime).map_err(|_| anyhow::anyhow!("prime out of range: {prime}"))?;
                skewcat::backends::finvec::FinVec::new(p)?;
                if let Some(s) = self.suites.iter().find(|s| *s != "cocomp") {
                    bail!("suite {s:?} needs the finset backend");
                }
                if !matches!(self.structure, Structure::Cartesian) {
                    bail!("the finvec backend only takes the cartesian structure");
                }
            }
        }
        match &self.structure {
            Structure::Dot { r } => distinct("R", r)?,
            Structure::Custom { r, tables } => {
                if let Some(r) = r {
                    distinct("R", r)?;
                }
                for t in tables {
                    for m in t.mutations() {
                        m.validate()?;
                    }
                }
            }
            Structure::Acu(spec) => {
                spec.validate()?;
                if let Some(s) = self.suites.iter().find(|s| SET_SUITES.contains(&s.as_str()) && *s != "smc") {
                    bail!("suite {s:?} needs a set-level structure, not acu");
                }
            }
            Structure::Cartesian => {}
        }
        if let Some(spec) = &self.acu {
            spec.validate()?;
        }
        let u = &self.universe;
        if let Some(n) = u.sets {
            let n = non_negative("universe.sets", n)?;
            if n > LETTERS.len() {
                bail!("universe.sets is at most {}", LETTERS.len());
            }
        }
        distinct("object names", u.objects.iter().map(|o| &o.name))?;
        for o in &u.objects {
            distinct(&format!("object {}", o.name), &o.elems)?;
        }
        for (what, v) in [("universe.em_max", u.em_max), ("universe.algebra_max", u.algebra_max), ("universe.presheaf_max", u.presheaf_max)] {
            if let Some(v) = v {
                non_negative(what, v)?;
            }
        }
        for &v in u.constants.iter().chain(&u.diagram_values).chain(&u.dims).chain(&u.diagram_dims) {
            non_negative("universe index or dimension", v)?;
        }
        if let Some(b) = u.dim_bound {
            positive("universe.dim_bound", b)?;
        }
        if let Some(c) = &u.caps {
            for (what, v) in [("caps.max_set", c.max_set), ("caps.max_dim", c.max_dim), ("caps.max_hom", c.max_hom)] {
                if let Some(v) = v {
                    positive(what, v)?;
                }
            }
        }
        for m in &self.mutations {
            m.validate()?;
        }
        Ok(())
    }

    /// Mutations from the fixture plus the entries of custom tables.
    pub fn all_mutations(&self) -> Vec<Mutation> {
        let mut out = Vec::new();
        if let Structure::Custom { tables, .. } = &self.structure {
            for t in tables {
                out.extend(t.mutations());
            }
        }
        out.extend(self.mutations.iter().cloned());
        out
    }

    pub fn caps(&self) -> Caps {
        let d = Caps::default();
        let c = self.universe.caps.clone().unwrap_or_default();
        let pick = |v: Option<i64>, dflt: usize| v.map(|v| v as usize).unwrap_or(dflt);
        Caps {
            max_set: pick(c.max_set, d.max_set),
            max_dim: pick(c.max_dim, d.max_dim),
            max_hom: pick(c.max_hom, d.max_hom),
        }
    }

    /// Base objects, smallest first.
    pub fn objects(&self) -> Vec<Obj> {
        let u = &self.universe;
        if !u.objects.is_empty() {
            return u.objects.iter().map(|o| atoms(&o.name, &o.elems)).collect();
        }
        let n = u.sets.unwrap_or(2) as usize;
        (0..=n).map(|k| Obj::atoms(format!("S{k}"), &LETTERS[..k])).collect()
    }

    fn upto(&self, max: Option<i64>) -> Vec<Obj> {
        let max = max.unwrap_or(2) as usize;
        self.objects().into_iter().filter(|o| o.size() <= max).collect()
    }

    /// Plain objects for the module-category suites.
    pub fn em_objects(&self) -> Vec<Obj> {
        self.upto(self.universe.em_max)
    }

    /// Carriers of the algebra and E-object universes.
    pub fn carriers(&self) -> Vec<Obj> {
        self.upto(self.universe.algebra_max)
    }

    pub fn presheaf_max(&self) -> usize {
        self.universe.presheaf_max.unwrap_or(2) as usize
    }

    pub fn seed(&self) -> u64 {
        self.universe.seed.unwrap_or(0)
    }

    /// The acu spec driving the acu and cocomp suites.
    pub fn acu_spec(&self) -> AcuSpec {
        match &self.structure {
            Structure::Acu(s) => s.clone(),
            _ => self.acu.clone().unwrap_or_default(),
        }
    }
}

impl AcuSpec {
    fn validate(&self) -> Result<()> {
        if let CategorySpec::Endomorphisms { r } = &self.category {
            distinct("R", r)?;
        }
        let cat = self.category.build()?;
        if let JSpec::Collapsed { object } = &self.j {
            if cat.object_index(object).is_none() {
                bail!("J collapses onto unknown object {object:?}");
            }
        }
        Ok(())
    }
}

impl Table {
    pub fn mutations(&self) -> Vec<Mutation> {
        self.entries
            .iter()
            .map(|[i, o]| Mutation {
                family: self.family.clone(),
                at: self.at.clone(),
                input: i.clone(),
                output: o.clone(),
            })
            .collect()
    }
}
