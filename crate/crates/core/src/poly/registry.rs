use std::sync::Arc;

use super::field::Field;
use crate::error::{Error, Result};

/// Budgets for the Gröbner kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest total degree of an S-pair lcm the kernel will process.
    pub degree_cap: u32,
    /// Largest number of S-pairs the kernel will reduce in one run.
    pub pair_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            degree_cap: 24,
            pair_cap: 200_000,
        }
    }
}

/// The ordered variable list a polynomial lives over, plus its coefficient field.
///
/// Registries never change once built; "adding" variables produces a new
/// registry whose variable list extends the old one, so polynomials over the
/// old registry lift by zero-padding.
#[derive(Debug, Clone)]
pub struct Registry {
    field: Field,
    vars: Vec<String>,
    limits: Limits,
}

impl PartialEq for Registry {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.vars == other.vars
    }
}

impl Eq for Registry {}

impl Registry {
    pub fn new<S: Into<String>>(field: Field, vars: impl IntoIterator<Item = S>) -> Result<Arc<Self>> {
        Self::with_limits(field, vars, Limits::default())
    }

    pub fn with_limits<S: Into<String>>(
        field: Field,
        vars: impl IntoIterator<Item = S>,
        limits: Limits,
    ) -> Result<Arc<Self>> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::Input(format!("`{v}` is not a valid variable name")));
            }
            if vars[..i].contains(v) {
                return Err(Error::Input(format!("variable `{v}` declared twice")));
            }
        }
        Ok(Arc::new(Registry { field, vars, limits }))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// A new registry with `extra` appended. Names colliding with existing
    /// ones get primes appended until unique.
    pub fn extend<S: AsRef<str>>(&self, extra: impl IntoIterator<Item = S>) -> Arc<Registry> {
        let mut vars = self.vars.clone();
        for name in extra {
            let mut n = name.as_ref().to_string();
            while vars.contains(&n) {
                n.push('_');
            }
            vars.push(n);
        }
        Arc::new(Registry {
            field: self.field,
            vars,
            limits: self.limits,
        })
    }

    /// Same variables and field, different budgets.
    pub fn with_new_limits(&self, limits: Limits) -> Arc<Registry> {
        Arc::new(Registry {
            field: self.field,
            vars: self.vars.clone(),
            limits,
        })
    }

    /// Whether `self` is `other` followed by zero or more extra variables.
    pub fn extends(&self, other: &Registry) -> bool {
        self.field == other.field && self.vars.len() >= other.vars.len() && self.vars[..other.vars.len()] == other.vars[..]
    }

    pub fn same(a: &Arc<Registry>, b: &Arc<Registry>) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }

    pub fn check_same(a: &Arc<Registry>, b: &Arc<Registry>) -> Result<()> {
        if Self::same(a, b) {
            Ok(())
        } else {
            Err(Error::RegistryMismatch(format!(
                "{}{:?} vs {}{:?}",
                a.field, a.vars, b.field, b.vars
            )))
        }
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
