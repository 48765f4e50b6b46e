use std::fmt;
use std::sync::Arc;

use super::monomial::{MonomialOrder, MAX_VARS};
use crate::error::{Error, Result};
use crate::field::PrimeField;

/// Polynomial ring `F_p[vars]` with a fixed term order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
    field: PrimeField,
    order: MonomialOrder,
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: Into<String>>(
        vars: impl IntoIterator<Item = S>,
        field: PrimeField,
        order: MonomialOrder,
    ) -> Result<Arc<Ring>> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() || vars.len() > MAX_VARS {
            return Err(Error::Parameter(format!(
                "a ring needs between 1 and {MAX_VARS} variables, got {}",
                vars.len()
            )));
        }
        for (i, v) in vars.iter().enumerate() {
            if !valid_name(v) {
                return Err(Error::Parameter(format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::Parameter(format!("duplicate variable `{v}`")));
            }
        }
        if let MonomialOrder::BlockElim(b) = order {
            if b > vars.len() {
                return Err(Error::Parameter(format!(
                    "elimination block {b} larger than {} variables",
                    vars.len()
                )));
            }
        }
        Ok(Arc::new(Ring { vars, field, order }))
    }

    /// `F_p[x, y, z]` with grevlex.
    pub fn xyz(field: PrimeField) -> Arc<Ring> {
        Ring::new(["x", "y", "z"], field, MonomialOrder::GrevLex).expect("static ring")
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables and field under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Ring>> {
        Ring::new(self.vars.clone(), self.field, order)
    }

    /// Prepends a fresh variable and orders to eliminate it.
    pub(crate) fn with_front_variable(&self) -> Result<Arc<Ring>> {
        let mut name = String::from("t");
        while self.vars.contains(&name) {
            name.push('_');
        }
        let mut vars = vec![name];
        vars.extend(self.vars.iter().cloned());
        Ring::new(vars, self.field, MonomialOrder::BlockElim(1))
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.vars.join(","))
    }
}
