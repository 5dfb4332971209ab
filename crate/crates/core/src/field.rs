//! Coefficient fields as carrier objects: operations live on the field, so
//! element types stay plain values.

use crate::poly::Vars;
use crate::rat::{rat_text, Rat};
use crate::ratfunc::RatFunc;

pub trait Field: Clone + PartialEq + std::fmt::Debug {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_rat(&self, r: &Rat) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Division by a nonzero element.
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul_rat(&self, a: &Self::Elem, r: &Rat) -> Self::Elem;
    fn text(&self, a: &Self::Elem) -> String;

    fn inv(&self, a: &Self::Elem) -> Self::Elem {
        self.div(&self.one(), a)
    }

    fn int(&self, n: i64) -> Self::Elem {
        self.from_rat(&crate::rat::rat_int(n))
    }
}

/// The rational numbers.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct QQ;

impl Field for QQ {
    type Elem = Rat;

    fn zero(&self) -> Rat {
        num_traits::Zero::zero()
    }

    fn one(&self) -> Rat {
        num_traits::One::one()
    }

    fn from_rat(&self, r: &Rat) -> Rat {
        r.clone()
    }

    fn is_zero(&self, a: &Rat) -> bool {
        num_traits::Zero::is_zero(a)
    }

    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a.clone() + b.clone()
    }

    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a.clone() - b.clone()
    }

    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a.clone() * b.clone()
    }

    fn neg(&self, a: &Rat) -> Rat {
        -a.clone()
    }

    fn div(&self, a: &Rat, b: &Rat) -> Rat {
        assert!(!self.is_zero(b), "division by zero");
        a.clone() / b.clone()
    }

    fn mul_rat(&self, a: &Rat, r: &Rat) -> Rat {
        a.clone() * r.clone()
    }

    fn text(&self, a: &Rat) -> String {
        rat_text(a)
    }
}

/// A field of rational functions in a fixed list of indeterminates.
#[derive(Clone, PartialEq, Debug)]
pub struct FracField {
    vars: Vars,
}

impl FracField {
    pub fn new(vars: Vars) -> Self {
        FracField { vars }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn var(&self, name: &str) -> RatFunc {
        RatFunc::var(&self.vars, name)
    }
}

impl Field for FracField {
    type Elem = RatFunc;

    fn zero(&self) -> RatFunc {
        RatFunc::zero(&self.vars)
    }

    fn one(&self) -> RatFunc {
        RatFunc::one(&self.vars)
    }

    fn from_rat(&self, r: &Rat) -> RatFunc {
        RatFunc::from_rat(&self.vars, r.clone())
    }

    fn is_zero(&self, a: &RatFunc) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.add(b)
    }

    fn sub(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.sub(b)
    }

    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.mul(b)
    }

    fn neg(&self, a: &RatFunc) -> RatFunc {
        a.neg()
    }

    fn div(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.div(b).expect("division by zero")
    }

    fn mul_rat(&self, a: &RatFunc, r: &Rat) -> RatFunc {
        a.scale(r)
    }

    fn text(&self, a: &RatFunc) -> String {
        a.text()
    }
}

pub fn field_tau() -> FracField {
    FracField::new(crate::poly::vars_tau())
}

pub fn field_sigma() -> FracField {
    FracField::new(crate::poly::vars_sigma())
}

pub fn field_qt() -> FracField {
    FracField::new(crate::poly::vars_qt())
}

pub fn field_tau_sigma() -> FracField {
    FracField::new(crate::poly::vars_tau_sigma())
}

pub fn field_tau_r_s() -> FracField {
    FracField::new(crate::poly::vars_tau_r_s())
}
