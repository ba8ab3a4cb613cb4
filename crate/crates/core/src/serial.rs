//! Serde adapters: integers are written as exact JSON numbers, rationals as
//! `"p/q"` strings in lowest terms (or `"p"` when integral).

use std::str::FromStr;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::arith::{Int, Rat};

pub fn rat_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn number(i: &Int) -> serde_json::Number {
    serde_json::Number::from_str(&i.to_string()).expect("integer literal is a valid JSON number")
}

pub fn int<S: Serializer>(i: &Int, s: S) -> Result<S::Ok, S::Error> {
    number(i).serialize(s)
}

pub fn int_vec<S: Serializer>(v: &[Int], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for i in v {
        seq.serialize_element(&number(i))?;
    }
    seq.end()
}

pub fn rat<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rat_string(r))
}

pub fn rat_vec<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for r in v {
        seq.serialize_element(&rat_string(r))?;
    }
    seq.end()
}

pub fn opt_rat<S: Serializer>(r: &Option<Rat>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_some(&rat_string(r)),
        None => s.serialize_none(),
    }
}
