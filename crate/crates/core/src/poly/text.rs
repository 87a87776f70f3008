//! Canonical text form: `c*x^e*y - z`, terms in decreasing order, signed
//! coefficients in `(-p/2, p/2]`, unit coefficients omitted.

use super::{Monomial, PolyRing, Polynomial};
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::fmt::Write;

pub fn format_monomial(ring: &PolyRing, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.names()[i].clone()),
            _ => parts.push(format!("{}^{}", ring.names()[i], e)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

pub fn format_polynomial(ring: &PolyRing, f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in f.terms().iter().enumerate() {
        let s = ring.field().to_signed(*c);
        let sign = if s < 0 { "-" } else { "+" };
        if k == 0 {
            if s < 0 {
                out.push('-');
            }
        } else {
            write!(out, " {sign} ").unwrap();
        }
        let a = s.unsigned_abs();
        match (a, m.is_one()) {
            (1, false) => out.push_str(&format_monomial(ring, m)),
            (_, true) => write!(out, "{a}").unwrap(),
            _ => write!(out, "{a}*{}", format_monomial(ring, m)).unwrap(),
        }
    }
    out
}

pub fn parse_polynomial(ring: &PolyRing, s: &str) -> Result<Polynomial> {
    let index: HashMap<&str, usize> = ring
        .names()
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), i))
        .collect();
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let field = ring.field();
    let mut terms = Vec::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let (negative, body) = match rest.as_bytes()[0] {
            b'-' => (true, &rest[1..]),
            b'+' => (false, &rest[1..]),
            _ if terms.is_empty() => (false, rest),
            _ => return Err(Error::Parse(format!("expected sign at `{rest}`"))),
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let (term, tail) = body.split_at(end);
        if term.is_empty() {
            return Err(Error::Parse("empty term".into()));
        }
        let mut coeff: u32 = 1;
        let mut exps = vec![0u32; ring.nvars()];
        for factor in term.split('*') {
            if factor.is_empty() {
                return Err(Error::Parse(format!("empty factor in `{term}`")));
            }
            if factor.bytes().all(|b| b.is_ascii_digit()) {
                let v: u64 = factor
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad integer `{factor}`")))?;
                let v = (v % field.characteristic() as u64) as u32;
                coeff = field.mul(coeff, v);
                continue;
            }
            let (name, e) = match factor.split_once('^') {
                Some((n, e)) => {
                    let e: u32 = e
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?;
                    (n, e)
                }
                None => (factor, 1),
            };
            let &i = index
                .get(name)
                .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
            exps[i] = exps[i].checked_add(e).ok_or(Error::ExponentOverflow)?;
        }
        if negative {
            coeff = field.neg(coeff);
        }
        terms.push((Monomial::from_u32(&exps)?, coeff));
        rest = tail;
    }
    Ok(ring.from_terms(terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{PrimeField, TermOrder};
    use proptest::prelude::*;

    fn ring() -> PolyRing {
        let names = ["q_0", "q_2", "q_3", "q_23"].iter().map(|s| s.to_string()).collect();
        PolyRing::new(PrimeField::new(32003).unwrap(), names, TermOrder::degrevlex())
    }

    #[test]
    fn parses_cut_binomial() {
        let r = ring();
        let f = r.parse("q_0*q_23 - q_2*q_3").unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(r.format(&f), "-q_2*q_3 + q_0*q_23");
        assert_eq!(r.format(&r.parse("-3*q_0^2 + 5 - 0*q_2").unwrap()), "-3*q_0^2 + 5");
        assert_eq!(r.format(&r.parse("q_2 - q_2").unwrap()), "0");
        assert!(r.parse("q_9").is_err());
        assert!(r.parse("q_0**q_2").is_err());
        assert!(r.parse("").is_err());
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(
            t in proptest::collection::vec((proptest::collection::vec(0u16..3, 4), 0u32..32003), 0..6)
        ) {
            let r = ring();
            let f = r.from_terms(t.into_iter().map(|(e, c)| (Monomial::from_exponents(e), c)).collect());
            let s = r.format(&f);
            let g = r.parse(&s).unwrap();
            prop_assert_eq!(&g, &f);
            prop_assert_eq!(r.format(&g), s);
        }
    }
}
