//! JSON encoding and decoding for the wire formats: monomials as arrays of
//! [index, exponent] pairs, ideals tagged with their basis convention, and
//! arbitrary-precision integers carried as plain JSON numbers.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use serde_json::{Map, Number, Value};

use dforms::{Basis, Monomial, MonomialIdeal, MonomialSpace};

pub const SCHEMA: &str = "dforms/1";

/// Input-layer failure; rendered as a diagnostic naming the field.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn err(msg: impl Into<String>) -> InputError {
    InputError(msg.into())
}

pub fn number_from_biguint(v: &BigUint) -> Number {
    Number::from_str(&v.to_string()).expect("integer literal")
}

pub fn number_from_bigint(v: &BigInt) -> Number {
    Number::from_str(&v.to_string()).expect("integer literal")
}

pub fn biguint_from_value(v: &Value, field: &str) -> Result<BigUint, InputError> {
    match v {
        Value::Number(n) => BigUint::from_str(&n.to_string()).map_err(|_| {
            err(format!(
                "field '{field}' must be a nonnegative integer, got {n}"
            ))
        }),
        other => Err(err(format!(
            "field '{field}' must be a nonnegative integer, got {other}"
        ))),
    }
}

pub fn u32_from_value(v: &Value, field: &str) -> Result<u32, InputError> {
    let n = v
        .as_u64()
        .ok_or_else(|| err(format!("field '{field}' must be a nonnegative integer")))?;
    u32::try_from(n).map_err(|_| err(format!("field '{field}' out of range")))
}

pub fn object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>, InputError> {
    v.as_object()
        .ok_or_else(|| err(format!("{what} must be a JSON object")))
}

pub fn field<'a>(obj: &'a Map<String, Value>, name: &str) -> Result<&'a Value, InputError> {
    obj.get(name)
        .ok_or_else(|| err(format!("missing field '{name}'")))
}

/// Monomial wire form: array of [index, exponent] pairs, indices in the
/// convention of `offset` (1 for the x1/y bases, 0 for x0).
pub fn monomial_to_value(m: &Monomial, offset: u32) -> Value {
    Value::Array(
        m.pairs()
            .iter()
            .map(|&(i, e)| Value::Array(vec![Value::from(i + offset), Value::from(e)]))
            .collect(),
    )
}

pub fn monomial_from_value(
    v: &Value,
    offset: u32,
    field_name: &str,
) -> Result<Monomial, InputError> {
    let arr = v.as_array().ok_or_else(|| {
        err(format!(
            "field '{field_name}' must be an array of [index, exponent] pairs"
        ))
    })?;
    let mut pairs = Vec::with_capacity(arr.len());
    for entry in arr {
        let pair = entry.as_array().filter(|p| p.len() == 2).ok_or_else(|| {
            err(format!(
                "field '{field_name}': each factor must be a [index, exponent] pair"
            ))
        })?;
        let raw_idx = u32_from_value(&pair[0], field_name)?;
        let exp = u32_from_value(&pair[1], field_name)?;
        if raw_idx < offset {
            return Err(err(format!(
                "field '{field_name}': index {raw_idx} below the {offset}-based convention"
            )));
        }
        pairs.push((raw_idx - offset, exp));
    }
    Ok(Monomial::from_pairs(pairs))
}

/// Ideal wire form: {"vars": n, "basis": "x0"|"x1"|"y", "gens": [...]},
/// generator indices in the tagged convention.
pub fn ideal_to_value(ideal: &MonomialIdeal) -> Value {
    let offset = ideal.basis().index_offset();
    let mut obj = Map::new();
    obj.insert("schema".into(), Value::from(SCHEMA));
    obj.insert("vars".into(), Value::from(ideal.vars()));
    obj.insert("basis".into(), Value::from(ideal.basis().tag()));
    obj.insert(
        "gens".into(),
        Value::Array(
            ideal
                .gens_canonical()
                .iter()
                .map(|g| monomial_to_value(g, offset))
                .collect(),
        ),
    );
    Value::Object(obj)
}

pub fn ideal_from_value(v: &Value) -> Result<MonomialIdeal, InputError> {
    let obj = object(v, "ideal")?;
    let vars = u32_from_value(field(obj, "vars")?, "vars")?;
    let tag = field(obj, "basis")?
        .as_str()
        .ok_or_else(|| err("field 'basis' must be one of \"x0\", \"x1\", \"y\""))?;
    let basis = Basis::from_tag(tag)
        .ok_or_else(|| err(format!("field 'basis': unknown convention '{tag}'")))?;
    let gens_value = field(obj, "gens")?
        .as_array()
        .ok_or_else(|| err("field 'gens' must be an array of monomials"))?;
    let offset = basis.index_offset();
    let gens = gens_value
        .iter()
        .map(|g| monomial_from_value(g, offset, "gens"))
        .collect::<Result<Vec<_>, _>>()?;
    MonomialIdeal::new(vars, basis, gens).map_err(|e| err(e.to_string()))
}

/// Space wire form: {"d": d, "members": [...]}, member indices 0-based
/// unless `offset` says otherwise.
pub fn space_from_value(v: &Value, offset: u32) -> Result<MonomialSpace, InputError> {
    let obj = object(v, "space")?;
    let d = u32_from_value(field(obj, "d")?, "d")?;
    let members_value = field(obj, "members")?
        .as_array()
        .ok_or_else(|| err("field 'members' must be an array of monomials"))?;
    let members = members_value
        .iter()
        .map(|m| monomial_from_value(m, offset, "members"))
        .collect::<Result<Vec<_>, _>>()?;
    MonomialSpace::from_members(d, members).map_err(|e| err(e.to_string()))
}
