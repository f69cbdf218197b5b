//! Exact rational scalars and weight tuples.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};

/// Exact arbitrary-precision rational. Every coefficient in the crate is one
/// of these; no floating point appears anywhere.
pub type Rat = Ratio<BigInt>;

/// Weight vector: exact rational Cartan eigenvalues, one per positive index.
pub type Weight = Vec<Rat>;

/// Integer as a rational.
pub fn rint(v: i64) -> Rat {
    Ratio::from_integer(BigInt::from(v))
}

/// Reduced fraction `num/den`.
pub fn rfrac(num: i64, den: i64) -> Rat {
    Ratio::new(BigInt::from(num), BigInt::from(den))
}

pub fn rzero() -> Rat {
    Rat::zero()
}

pub fn rone() -> Rat {
    Rat::one()
}

/// k! as a rational.
pub fn factorial(k: u64) -> Rat {
    let mut acc = BigInt::from(1);
    for i in 2..=k {
        acc *= BigInt::from(i);
    }
    Ratio::from_integer(acc)
}

/// Renders a rational without the `Ratio` debug noise: `3`, `-1/2`, `0`.
pub fn fmt_rat(r: &Rat) -> alloc::string::String {
    use alloc::format;
    if r.denom() == &BigInt::from(1) {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders a weight tuple as `(a,b,...)`.
pub fn fmt_weight(w: &[Rat]) -> alloc::string::String {
    use alloc::string::String;
    let mut s = String::from("(");
    for (k, c) in w.iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        s.push_str(&fmt_rat(c));
    }
    s.push(')');
    s
}
