use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::bessel::{BesselArg, BesselCombo};
use crate::darboux::ParamVector;
use crate::error::{Error, Result};
use crate::exact::{format_rational, Poly, Rational, Var};

/// How a formula was produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    /// `max(R, S)`
    pub big_t: usize,
    /// Parity branches instantiated.
    pub eps: Vec<u8>,
    /// Index of the last series coefficient computed.
    pub truncation: usize,
    /// Built for `(m, n)` and carried over by the symmetry relation.
    pub transported: bool,
}

/// `u(n, m, t) = e^{−2t} Σ_j β_j(t) I_j(2t)`, orders folded to `j ≥ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelFormula {
    pub params: ParamVector,
    pub n: i64,
    pub m: i64,
    pub combo: BesselCombo,
    pub provenance: Provenance,
}

impl KernelFormula {
    pub(crate) fn new(params: ParamVector, n: i64, m: i64, combo: BesselCombo, provenance: Provenance) -> Result<Self> {
        if combo.arg() != BesselArg::TwoT {
            return Err(Error::InternalInconsistency("kernel combinations use I_j(2t)".into()));
        }
        Ok(KernelFormula { params, n, m, combo: combo.folded(), provenance })
    }

    /// `β_j` (zero off the support).
    pub fn beta(&self, j: i64) -> Poly<Rational> {
        self.combo.coeff(j)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Poly<Rational>)> + '_ {
        self.combo.terms()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.combo.max_degree()
    }

    /// `Σ_j β_j(0) I_j(0) = β_0(0)`, which must be `δ_{nm}`.
    pub fn initial_value(&self) -> Rational {
        self.beta(0).coeff(0)
    }

    /// Multiplies every `β_j` by `c`.
    pub fn scaled(&self, c: &Rational) -> BesselCombo {
        self.combo.scale(c)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> =
            self.terms().map(|(j, b)| json!({ "order": j, "beta": b.coeff_strings() })).collect();
        json!({
            "R": self.params.r_steps(),
            "S": self.params.s_steps(),
            "r": self.params.times().iter().map(format_rational).collect::<Vec<_>>(),
            "n": self.n,
            "m": self.m,
            "terms": terms,
            "prefactor": "exp(-2*t)",
            "bessel_arg": "2*t",
            "provenance": {
                "T": self.provenance.big_t,
                "eps": self.provenance.eps,
                "truncation": self.provenance.truncation,
                "transported": self.provenance.transported,
            },
        })
    }

    /// Plain text, e.g. `exp(-2t) * I_2(2t)`.
    pub fn to_text(&self) -> String {
        let one = Poly::constant(Var::T, Rational::one());
        let mut terms = self.terms();
        match (terms.next(), terms.next()) {
            (None, _) => "0".into(),
            (Some((j, b)), None) if b == &one => format!("exp(-2t) * I_{j}(2t)"),
            _ => format!("exp(-2t) * [{}]", self.combo),
        }
    }

    /// LaTeX: `u(n,m,t) = e^{-2t}\Big[ (β_j) I_{j}(2t) + … \Big]`.
    pub fn to_latex(&self) -> String {
        let parts: Vec<String> = self
            .terms()
            .map(|(j, b)| {
                let nonzero = b.coeffs().iter().filter(|c| !c.is_zero()).count();
                if b == &Poly::constant(Var::T, Rational::one()) {
                    format!("I_{{{j}}}(2t)")
                } else if nonzero == 1 {
                    format!("{} \\, I_{{{j}}}(2t)", b.to_latex())
                } else {
                    format!("\\left({}\\right) I_{{{j}}}(2t)", b.to_latex())
                }
            })
            .collect();
        let body = if parts.is_empty() { "0".to_string() } else { parts.join("\n  + ") };
        format!("u({},{},t) = e^{{-2t}} \\Big[\n  {}\n\\Big]", self.n, self.m, body.replace("+ -", "- "))
    }
}
