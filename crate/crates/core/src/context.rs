//! Session context: which shift operator acts on y, and the parameter
//! variables generating the coefficient field F.

use crate::arith::{CoeffElem, ParamPoly};

/// The automorphism acting on y (and x in the bivariate layer).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftCase {
    /// sigma(y) = y + 1
    Shift,
    /// sigma(y) = q*y, q neither zero nor a root of unity
    QShift,
}

/// Read-only description of the coefficient field F.
///
/// F is the fraction field of Q[vars]. In the q-shift case `vars[0]` is q
/// and `vars[1]` is x; in the usual shift case `vars[0]` is x. Any further
/// entries are user-declared independent transcendentals (such as q^b in
/// q-Chu-Vandermonde). The main variable y of F\[y\] is not listed here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Context {
    case: ShiftCase,
    vars: Vec<String>,
}

impl Context {
    pub fn shift(params: &[&str]) -> Self {
        let mut vars = vec!["x".to_string()];
        vars.extend(params.iter().map(|s| s.to_string()));
        Context {
            case: ShiftCase::Shift,
            vars,
        }
    }

    pub fn qshift(params: &[&str]) -> Self {
        let mut vars = vec!["q".to_string(), "x".to_string()];
        vars.extend(params.iter().map(|s| s.to_string()));
        Context {
            case: ShiftCase::QShift,
            vars,
        }
    }

    pub fn case(&self) -> ShiftCase {
        self.case
    }

    pub fn is_q(&self) -> bool {
        self.case == ShiftCase::QShift
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    /// Index of q among the parameter variables (q-shift case only).
    pub fn q_index(&self) -> Option<usize> {
        match self.case {
            ShiftCase::QShift => Some(0),
            ShiftCase::Shift => None,
        }
    }

    /// Index of x among the parameter variables.
    pub fn x_index(&self) -> usize {
        match self.case {
            ShiftCase::QShift => 1,
            ShiftCase::Shift => 0,
        }
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// The element q of F (q-shift case only).
    pub fn q(&self) -> CoeffElem {
        let idx = self.q_index().expect("q is only defined in the q-shift case");
        CoeffElem::from_poly(ParamPoly::var(idx))
    }

    /// q^k for k of either sign.
    pub fn q_pow(&self, k: i64) -> CoeffElem {
        let q = self.q();
        q.pow(k)
    }

    /// The element x of F.
    pub fn x(&self) -> CoeffElem {
        CoeffElem::from_poly(ParamPoly::var(self.x_index()))
    }
}
