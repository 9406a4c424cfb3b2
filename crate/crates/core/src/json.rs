//! JSON encodings. Rationals are strings `"p/q"` (or `"p"`); every other
//! object is built from those.

use serde_json::{json, Map, Value};

use crate::branch::{CharLadder, PuiseuxParam, Semigroup};
use crate::curvering::WPoly;
use crate::dicritical::SeparatrixFamily;
use crate::error::{Error, Result};
use crate::kernel::{format_rational, parse_rational, RatFunc, Rational, TruncSeries, UPoly};
use crate::oneform::OneForm;

fn err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse(msg.into()))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| Error::Parse(format!("{what}: expected a nonnegative integer, got {v}")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::Parse(format!("{what}: expected an array")))
}

fn optional_bound(obj: &Map<String, Value>, key: &str) -> Result<Option<usize>> {
    match obj.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(v) => as_usize(v, key).map(Some),
    }
}

pub fn rational_to_json(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap().into())),
        _ => err(format!("expected a rational string, got {v}")),
    }
}

fn upoly_to_json(p: &UPoly) -> Value {
    Value::Array(p.terms().map(|(d, c)| json!([d, rational_to_json(c)])).collect())
}

fn upoly_from_json(v: &Value) -> Result<UPoly> {
    let mut terms = Vec::new();
    for t in as_array(v, "polynomial")? {
        let t = as_array(t, "polynomial term")?;
        if t.len() != 2 {
            return err("polynomial term must be [degree, coefficient]");
        }
        terms.push((as_usize(&t[0], "degree")?, rational_from_json(&t[1])?));
    }
    Ok(UPoly::from_terms(terms))
}

pub fn ratfunc_to_json(f: &RatFunc) -> Value {
    json!({ "num": upoly_to_json(f.num()), "den": upoly_to_json(f.den()) })
}

pub fn ratfunc_from_json(v: &Value) -> Result<RatFunc> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("rational function must be an object".into()))?;
    let num = upoly_from_json(obj.get("num").ok_or_else(|| Error::Parse("missing num".into()))?)?;
    let den = match obj.get("den") {
        Some(d) => upoly_from_json(d)?,
        None => UPoly::one(),
    };
    if den.is_zero() {
        return err("zero denominator");
    }
    Ok(RatFunc::new(num, den))
}

fn series_terms<K>(y: &TruncSeries<K>, enc: impl Fn(&K) -> Value) -> Value
where
    K: crate::kernel::Field,
{
    Value::Array(y.terms().map(|(k, c)| json!([k, enc(c)])).collect())
}

fn series_from_terms<K: crate::kernel::Field>(
    v: &Value,
    valid_below: Option<usize>,
    dec: impl Fn(&Value) -> Result<K>,
) -> Result<TruncSeries<K>> {
    let mut terms = Vec::new();
    for t in as_array(v, "y")? {
        let t = as_array(t, "y term")?;
        if t.len() != 2 {
            return err("series term must be [exponent, coefficient]");
        }
        terms.push((as_usize(&t[0], "exponent")?, dec(&t[1])?));
    }
    Ok(TruncSeries::new(terms, valid_below))
}

fn param_json<K: crate::kernel::Field>(p: &PuiseuxParam<K>, enc: impl Fn(&K) -> Value) -> Value {
    let mut obj = Map::new();
    obj.insert("n".into(), json!(p.n()));
    obj.insert("y".into(), series_terms(p.y(), enc));
    if let Some(v) = p.valid_below() {
        obj.insert("valid_below".into(), json!(v));
    }
    Value::Object(obj)
}

/// `{"n": 6, "y": [[9, "1"], …], "valid_below": 40}`; a missing bound means exact.
pub fn param_to_json(p: &PuiseuxParam<Rational>) -> Value {
    param_json(p, rational_to_json)
}

pub fn param_from_json(v: &Value) -> Result<PuiseuxParam<Rational>> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("branch must be an object".into()))?;
    let n = as_usize(obj.get("n").ok_or_else(|| Error::Parse("branch: missing n".into()))?, "n")?;
    let y =
        series_from_terms(obj.get("y").unwrap_or(&json!([])), optional_bound(obj, "valid_below")?, rational_from_json)?;
    PuiseuxParam::new(n, y)
}

pub fn ratfunc_param_to_json(p: &PuiseuxParam<RatFunc>) -> Value {
    param_json(p, ratfunc_to_json)
}

/// `{"terms": [[i, j, "p/q"], …], "x_valid_below": M | null}`. A bare array of
/// triples is accepted as an exact polynomial.
pub fn wpoly_to_json(h: &WPoly<Rational>) -> Value {
    json!({
        "terms": h.terms().map(|((i, j), c)| json!([i, j, rational_to_json(c)])).collect::<Vec<_>>(),
        "x_valid_below": h.x_valid_below(),
    })
}

pub fn wpoly_from_json(v: &Value) -> Result<WPoly<Rational>> {
    let (terms, bound) = match v {
        Value::Array(_) => (v, None),
        Value::Object(obj) => (
            obj.get("terms").ok_or_else(|| Error::Parse("polynomial: missing terms".into()))?,
            optional_bound(obj, "x_valid_below")?,
        ),
        _ => return err("polynomial must be an object or an array of [i, j, c]"),
    };
    let mut out = Vec::new();
    for t in as_array(terms, "terms")? {
        let t = as_array(t, "monomial")?;
        if t.len() != 3 {
            return err("monomial must be [i, j, coefficient]");
        }
        out.push(((as_usize(&t[0], "i")?, as_usize(&t[1], "j")?), rational_from_json(&t[2])?));
    }
    Ok(WPoly::new(out, bound))
}

pub fn form_to_json(w: &OneForm<Rational>) -> Value {
    json!({ "A": wpoly_to_json(&w.a), "B": wpoly_to_json(&w.b) })
}

pub fn form_from_json(v: &Value) -> Result<OneForm<Rational>> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("form must be an object".into()))?;
    let get = |k: &str| match obj.get(k) {
        Some(p) => wpoly_from_json(p),
        None => Ok(WPoly::zero()),
    };
    Ok(OneForm::new(get("A")?, get("B")?))
}

pub fn ladder_to_json(l: &CharLadder, s: &Semigroup) -> Value {
    json!({ "beta": l.beta, "e": l.e, "n": l.nseq, "g": l.genus(), "v": s.v, "mu": s.mu })
}

pub fn family_to_json(f: &SeparatrixFamily) -> Value {
    json!({
        "x_exp": f.x_exp(),
        "u_exponent": f.u_exponent(),
        "gamma1j": f.gamma1j(),
        "valid_below": f.valid_below(),
        "y": series_terms(f.param().y(), ratfunc_to_json),
    })
}

pub fn family_from_json(v: &Value) -> Result<SeparatrixFamily> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("family must be an object".into()))?;
    let field = |k: &str| as_usize(obj.get(k).ok_or_else(|| Error::Parse(format!("family: missing {k}")))?, k);
    let y = series_from_terms(obj.get("y").unwrap_or(&json!([])), Some(field("valid_below")?), ratfunc_from_json)?;
    Ok(SeparatrixFamily::new(PuiseuxParam::new(field("x_exp")?, y)?, field("u_exponent")?, field("gamma1j")?))
}

/// Input document of the command-line tool; every key is optional.
#[derive(Debug, Clone, Default)]
pub struct InputDoc {
    pub branch: Option<PuiseuxParam<Rational>>,
    pub h1: Option<WPoly<Rational>>,
    pub h2: Option<WPoly<Rational>>,
    pub form: Option<OneForm<Rational>>,
    pub other: Option<PuiseuxParam<Rational>>,
    pub poly: Option<WPoly<Rational>>,
}

impl InputDoc {
    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| Error::Parse("input must be a JSON object".into()))?;
        Ok(InputDoc {
            branch: obj.get("branch").map(param_from_json).transpose()?,
            h1: obj.get("H1").map(wpoly_from_json).transpose()?,
            h2: obj.get("H2").map(wpoly_from_json).transpose()?,
            form: obj.get("form").map(form_from_json).transpose()?,
            other: obj.get("other").map(param_from_json).transpose()?,
            poly: obj.get("poly").map(wpoly_from_json).transpose()?,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::dicritical::solve_separatrix_family;
    use crate::kernel::ratio;

    #[test]
    fn branch_round_trip() {
        let p = catalog::sextic().with_valid_below(40);
        let v = param_to_json(&p);
        assert_eq!(v, json!({"n": 6, "y": [[9, "1"], [12, "1"], [13, "2"]], "valid_below": 40}));
        assert_eq!(param_from_json(&v).unwrap(), p);
        let exact = catalog::sextic();
        assert_eq!(param_from_json(&param_to_json(&exact)).unwrap(), exact);
    }

    #[test]
    fn polynomial_and_form_round_trip() {
        let h = WPoly::new([((0, 2), ratio(33, 20)), ((3, 0), ratio(-1, 1))], Some(9));
        assert_eq!(wpoly_from_json(&wpoly_to_json(&h)).unwrap(), h);
        assert_eq!(wpoly_from_json(&json!([[0, 1, "1"]])).unwrap(), WPoly::y());
        let w = OneForm::new(WPoly::from_ints(&[(0, 2, -9), (4, 0, -5)]), WPoly::from_ints(&[(1, 1, 6)]));
        assert_eq!(form_from_json(&form_to_json(&w)).unwrap(), w);
    }

    #[test]
    fn family_round_trip() {
        let f = solve_separatrix_family(&catalog::zeta1(), 10).unwrap();
        let v = family_to_json(&f);
        assert_eq!(v["y"][1], json!([5, {"num": [[0, "5/6"]], "den": [[1, "1"]]}]));
        assert_eq!(family_from_json(&v).unwrap(), f);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(InputDoc::parse("{"), Err(Error::Parse(_))));
        assert!(matches!(InputDoc::parse(r#"{"branch": {"n": 2, "y": [[3, "1/0"]]}}"#), Err(Error::Parse(_))));
        assert!(matches!(InputDoc::parse(r#"{"poly": [[1, 2]]}"#), Err(Error::Parse(_))));
        let doc = InputDoc::parse(r#"{"branch": {"n": 2, "y": [[3, "1"]]}, "H1": [[0, 0, "1"]]}"#).unwrap();
        assert_eq!(doc.branch.unwrap(), catalog::cusp());
        assert_eq!(doc.h1.unwrap(), WPoly::one());
    }
}
