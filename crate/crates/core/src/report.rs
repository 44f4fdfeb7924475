//! Serde adapters: rationals are always written as `"p/q"` strings.

use serde::ser::SerializeSeq;
use serde::Serializer;

use crate::rational::{format_extended, format_rational, Extended, Rational};

pub(crate) fn ser_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

pub(crate) fn ser_opt_rational<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&format_rational(r)),
        None => s.serialize_none(),
    }
}

pub(crate) fn ser_rationals<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for r in v {
        seq.serialize_element(&format_rational(r))?;
    }
    seq.end()
}

pub(crate) fn ser_extended<S: Serializer>(v: &Extended<Rational>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_extended(v))
}
