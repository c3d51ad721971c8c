//! Variable registries: the ordered variable universe a polynomial lives in.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// What role a registry variable plays. The kind is fixed at creation and
/// drives validation (e.g. implicitization rejects named constants).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarKind {
    /// A parameter `t_i` (or a derived torus-side parameter like `c1`).
    Param,
    /// An ambient or torus coordinate (`x_i`, `y_ij`).
    TorusCoord,
    /// The Rabinowitsch variable `W`.
    Rabinowitsch,
    /// A named transcendental constant (the paper's `A_1 = cos(a_1)` device).
    NamedConst,
}

impl VarKind {
    /// Infers a kind from a bare name, used when reading the JSON forms
    /// (which carry names only). `W` is reserved; `t*` are parameters;
    /// `x*`/`y*` and the pure-form symbols `c*`/`s*`/`ch*`/`sh*` are
    /// coordinates; `cos_*`-style phase symbols and anything else are
    /// constants.
    pub fn infer(name: &str) -> VarKind {
        if name == "W" {
            return VarKind::Rabinowitsch;
        }
        for prefix in ["cos_", "sin_", "cosh_", "sinh_"] {
            if name.starts_with(prefix) {
                return VarKind::NamedConst;
            }
        }
        let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
        if let Some(rest) = name.strip_prefix('t') {
            if digits(rest) {
                return VarKind::Param;
            }
        }
        for prefix in ["x", "y", "c", "s", "ch", "sh"] {
            if let Some(rest) = name.strip_prefix(prefix) {
                if digits(rest) {
                    return VarKind::TorusCoord;
                }
            }
        }
        VarKind::NamedConst
    }
}

/// Ordered list of named variables. The position of a variable determines its
/// slot in every exponent vector of polynomials over this registry.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct VarRegistry {
    vars: Vec<(String, VarKind)>,
}

/// Registries are shared immutably between all values built over them.
pub type Registry = Arc<VarRegistry>;

impl VarRegistry {
    pub fn new(vars: Vec<(String, VarKind)>) -> Result<Registry> {
        for (i, (name, _)) in vars.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidInput("empty variable name".into()));
            }
            if vars[..i].iter().any(|(n, _)| n == name) {
                return Err(Error::InvalidInput(format!("duplicate variable '{name}'")));
            }
        }
        Ok(Arc::new(VarRegistry { vars }))
    }

    /// Convenience constructor inferring kinds from names.
    pub fn from_names<S: AsRef<str>>(names: &[S]) -> Result<Registry> {
        Self::new(
            names
                .iter()
                .map(|n| (n.as_ref().to_string(), VarKind::infer(n.as_ref())))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.vars[i].0
    }

    pub fn kind(&self, i: usize) -> VarKind {
        self.vars[i].1
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|(n, _)| n == name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.vars.iter().map(|(n, _)| n.as_str())
    }

    pub fn indices_of_kind(&self, kind: VarKind) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.kind(i) == kind).collect()
    }
}

impl fmt::Display for VarRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (name, _)) in self.vars.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{name}")?;
        }
        write!(f, "]")
    }
}

/// True when two registries are interchangeable (same object or same content).
pub fn same_registry(a: &Registry, b: &Registry) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates() {
        assert!(VarRegistry::from_names(&["t1", "t1"]).is_err());
    }

    #[test]
    fn kind_inference() {
        assert_eq!(VarKind::infer("W"), VarKind::Rabinowitsch);
        assert_eq!(VarKind::infer("t3"), VarKind::Param);
        assert_eq!(VarKind::infer("x1"), VarKind::TorusCoord);
        assert_eq!(VarKind::infer("y21"), VarKind::TorusCoord);
        assert_eq!(VarKind::infer("A1"), VarKind::NamedConst);
        assert_eq!(VarKind::infer("ch2"), VarKind::TorusCoord);
        assert_eq!(VarKind::infer("cos_a1"), VarKind::NamedConst);
    }
}
