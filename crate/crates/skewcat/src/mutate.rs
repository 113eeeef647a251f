//! Single-entry corruptions of named component families, used to show
//! that every check can actually fail.

use serde::{Deserialize, Serialize};

use crate::backends::finset::{Elem, Mor};
use crate::error::{Error, Result};

/// Replace the value of one component of `family` at one input. `at`
/// names the objects indexing the component, in order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mutation {
    pub family: String,
    #[serde(default)]
    pub at: Vec<String>,
    pub input: String,
    pub output: String,
}

/// Families a fixture may corrupt.
pub const FAMILIES: &[&str] = &[
    "gamma", "eta", "eps", "Gamma", "Gamma'", "psi", "pi", "sigma", "q", "lambda2", "J", "ev",
];

impl Mutation {
    pub fn validate(&self) -> Result<()> {
        if !FAMILIES.contains(&self.family.as_str()) {
            return Err(Error::input(format!("unknown mutation family {:?}", self.family)));
        }
        Elem::parse(&self.input)?;
        Elem::parse(&self.output)?;
        Ok(())
    }

    pub fn matches(&self, family: &str, at: &[String]) -> bool {
        self.family == family && self.at == at
    }

    pub fn apply(&self, m: &Mor) -> Result<Mor> {
        let input = Elem::parse(&self.input)?;
        let output = Elem::parse(&self.output)?;
        if !m.dom().contains(&input) {
            return Err(Error::input(format!("mutation input {input} is not in {}", m.dom())));
        }
        if !m.cod().contains(&output) {
            return Err(Error::input(format!("mutation output {output} is not in {}", m.cod())));
        }
        Ok(m.patched(input, output))
    }
}

/// Apply every matching mutation to a freshly computed component.
pub fn mutate(muts: &[Mutation], family: &str, at: &[String], m: Mor) -> Result<Mor> {
    let mut m = m;
    for mu in muts.iter().filter(|mu| mu.matches(family, at)) {
        m = mu.apply(&m)?;
    }
    Ok(m)
}
