//! Exact integers as JSON numbers. Relies on serde_json's
//! `arbitrary_precision` feature so big values are written digit for digit.

use std::fmt::Display;
use std::str::FromStr;

use serde_json::Number;

pub(crate) fn int_to_number<T: Display>(v: &T) -> Result<Number, String> {
    let s = v.to_string();
    Number::from_str(&s).map_err(|e| format!("{s} is not a JSON number: {e}"))
}

pub(crate) fn number_to_int<T: FromStr>(n: &Number) -> Result<T, String> {
    let s = n.to_string();
    s.parse::<T>()
        .map_err(|_| format!("expected an integer, found {s}"))
}
