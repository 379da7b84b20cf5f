//! Text and JSON front ends for [`Diagram`].
//!
//! Text grammar: slices separated by `;` (bottom first), generators by `,`,
//! `#` starts a comment.
//!
//! ```text
//! gen := id(L) | lev(L) | lcoev(L) | rev(L) | rcoev(L)
//!      | x+(L,L) | x-(L,L) | tw+(L) | tw-(L) | coup(name)
//! L   := V<int> | P<int> | L* | (L(x)L) | red
//! ```

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::Value;

use super::{Coupon, Diagram, GenKind, Generator, ObjectLabel, Slice};
use crate::error::{Error, Result, Span};
use crate::rep::ModLabel;

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn span(&self) -> Span {
        Span { line: self.line, column: self.col }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { span: self.span(), message: message.into() })
    }

    fn bump(&mut self) {
        if self.src[self.pos] == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        self.pos += 1;
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() {
            match self.src[self.pos] {
                b' ' | b'\t' | b'\r' | b'\n' => self.bump(),
                b'#' => {
                    while self.pos < self.src.len() && self.src[self.pos] != b'\n' {
                        self.bump();
                    }
                }
                _ => break,
            }
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(s.as_bytes()) {
            for _ in 0..s.len() {
                self.bump();
            }
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.eat(s) {
            Ok(())
        } else {
            let found = self.peek().map_or("end of input".to_string(), |c| format!("'{}'", c as char));
            self.err(format!("expected '{}', found {}", s, found))
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() {
            let c = self.src[self.pos];
            if c.is_ascii_alphanumeric() || c == b'_' || c == b'+' || c == b'-' || c == b'.' {
                self.bump();
            } else {
                break;
            }
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn uint(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.bump();
        }
        if start == self.pos {
            return self.err("expected a module index");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Syntax { span: self.span(), message: "module index too large".into() })
    }

    fn label(&mut self) -> Result<ObjectLabel> {
        let span = self.span();
        let base = match self.peek() {
            Some(b'V') => {
                self.bump();
                ObjectLabel::Blue(ModLabel::V(self.uint()?))
            }
            Some(b'P') => {
                self.bump();
                ObjectLabel::Blue(ModLabel::P(self.uint()?))
            }
            Some(b'r') => {
                if !self.eat("red") {
                    return self.err("expected a label");
                }
                ObjectLabel::Red
            }
            Some(b'(') => {
                self.bump();
                let a = self.label()?;
                self.expect("(x)")?;
                let b = self.label()?;
                self.expect(")")?;
                match (a, b) {
                    (ObjectLabel::Blue(a), ObjectLabel::Blue(b)) => ObjectLabel::Blue(a.tensor(&b)),
                    _ => return Err(Error::Syntax { span, message: "red strands cannot be tensored".into() }),
                }
            }
            _ => return self.err("expected a label"),
        };
        let mut out = base;
        while self.peek() == Some(b'*') {
            self.bump();
            out = match out {
                ObjectLabel::Blue(m) => ObjectLabel::Blue(m.dual()),
                ObjectLabel::Red => return Err(Error::Syntax { span, message: "red strands cannot be dualised".into() }),
            };
        }
        Ok(out)
    }

    fn generator(&mut self) -> Result<Generator> {
        self.skip_ws();
        let span = self.span();
        let name = self.ident();
        let kind = match name.as_str() {
            "id" => GenKind::Id,
            "lev" => GenKind::Lev,
            "lcoev" => GenKind::Lcoev,
            "rev" => GenKind::Rev,
            "rcoev" => GenKind::Rcoev,
            "x+" => GenKind::Cross(1),
            "x-" => GenKind::Cross(-1),
            "tw+" => GenKind::Twist(1),
            "tw-" => GenKind::Twist(-1),
            "coup" => {
                self.expect("(")?;
                let n = self.ident();
                if n.is_empty() {
                    return self.err("expected a coupon name");
                }
                self.expect(")")?;
                return Ok(Generator { kind: GenKind::Coupon(n), labels: vec![], span });
            }
            "" => return self.err("expected a generator"),
            other => return Err(Error::Syntax { span, message: format!("unknown generator '{}'", other) }),
        };
        self.expect("(")?;
        let mut labels = vec![self.label()?];
        if matches!(kind, GenKind::Cross(_)) {
            self.expect(",")?;
            labels.push(self.label()?);
        }
        self.expect(")")?;
        Ok(Generator { kind, labels, span })
    }
}

/// Parses a single generator such as `x+(V1,P0*)`.
pub fn parse_generator(text: &str) -> Result<Generator> {
    let mut lx = Lexer::new(text);
    let g = lx.generator()?;
    if !lx.at_end() {
        return lx.err("trailing input after generator");
    }
    Ok(g)
}

fn parse_slices(text: &str) -> Result<Vec<Slice>> {
    let mut lx = Lexer::new(text);
    let mut slices = Vec::new();
    loop {
        if lx.at_end() {
            break;
        }
        if lx.eat(";") {
            continue;
        }
        let span = lx.span();
        let mut gens = vec![lx.generator()?];
        while lx.eat(",") {
            gens.push(lx.generator()?);
        }
        slices.push(Slice { gens, span });
        if !lx.at_end() {
            lx.expect(";")?;
        }
    }
    Ok(slices)
}

/// Parses a diagram in the text grammar (no coupons).
pub fn parse_diagram(text: &str) -> Result<Diagram> {
    parse_diagram_with_coupons(text, None)
}

/// Parses a diagram with an optional JSON coupon table of the form
/// `{"name": {"source": ["V1"], "target": ["V1"], "matrix": [[...]]}}`.
pub fn parse_diagram_with_coupons(text: &str, coupons: Option<&str>) -> Result<Diagram> {
    let slices = parse_slices(text)?;
    let coupons = match coupons {
        Some(src) => {
            let v: Value = serde_json::from_str(src).map_err(json_err)?;
            parse_coupon_table(&v)?
        }
        None => BTreeMap::new(),
    };
    let d = Diagram { slices, coupons };
    d.validate()?;
    Ok(d)
}

/// Parses the JSON form: `{"slices": [[gen, ...], ...], "coupons": {...}}`
/// where each generator is either a string in the text grammar or an
/// object `{"gen": "x+", "labels": ["V1", "V2"]}` / `{"gen": "coup", "name": "f"}`.
pub fn parse_diagram_json(text: &str) -> Result<Diagram> {
    let v: Value = serde_json::from_str(text).map_err(json_err)?;
    let slices_v = v
        .get("slices")
        .and_then(Value::as_array)
        .ok_or_else(|| syntax("expected an object with a \"slices\" array"))?;
    let mut slices = Vec::new();
    for (k, sv) in slices_v.iter().enumerate() {
        let arr = sv.as_array().ok_or_else(|| syntax(format!("slice {} is not an array", k)))?;
        let span = Span { line: k + 1, column: 1 };
        let mut gens = Vec::new();
        for gv in arr {
            let mut g = json_generator(gv)?;
            g.span = span;
            gens.push(g);
        }
        if !gens.is_empty() {
            slices.push(Slice { gens, span });
        }
    }
    let coupons = match v.get("coupons") {
        Some(c) => parse_coupon_table(c)?,
        None => BTreeMap::new(),
    };
    let d = Diagram { slices, coupons };
    d.validate()?;
    Ok(d)
}

fn json_generator(v: &Value) -> Result<Generator> {
    if let Some(s) = v.as_str() {
        return parse_generator(s);
    }
    let gen = v.get("gen").and_then(Value::as_str).ok_or_else(|| syntax("generator object needs \"gen\""))?;
    if gen == "coup" {
        let name = v.get("name").and_then(Value::as_str).ok_or_else(|| syntax("coupon needs \"name\""))?;
        return parse_generator(&format!("coup({})", name));
    }
    let labels: Vec<String> = v
        .get("labels")
        .and_then(Value::as_array)
        .ok_or_else(|| syntax("generator needs \"labels\""))?
        .iter()
        .map(|l| l.as_str().map(str::to_string).ok_or_else(|| syntax("labels must be strings")))
        .collect::<Result<_>>()?;
    parse_generator(&format!("{}({})", gen, labels.join(",")))
}

fn parse_label(text: &str) -> Result<ObjectLabel> {
    let mut lx = Lexer::new(text);
    let l = lx.label()?;
    if !lx.at_end() {
        return lx.err("trailing input after label");
    }
    Ok(l)
}

fn parse_coupon_table(v: &Value) -> Result<BTreeMap<String, Coupon>> {
    let obj = v.as_object().ok_or_else(|| syntax("coupon table must be an object"))?;
    let mut out = BTreeMap::new();
    for (name, c) in obj {
        let bad = |m: &str| Error::InvalidCoupon { name: name.clone(), message: m.to_string() };
        let labels = |key: &str| -> Result<Vec<ObjectLabel>> {
            c.get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| bad(&format!("missing \"{}\"", key)))?
                .iter()
                .map(|l| parse_label(l.as_str().ok_or_else(|| bad("labels must be strings"))?))
                .collect()
        };
        let source = labels("source")?;
        let target = labels("target")?;
        let rows = c.get("matrix").and_then(Value::as_array).ok_or_else(|| bad("missing \"matrix\""))?;
        let mut entries = Vec::new();
        for row in rows {
            let row = row.as_array().ok_or_else(|| bad("matrix rows must be arrays"))?;
            entries.push(row.iter().map(|e| scalar_coords(e).ok_or_else(|| bad("bad matrix entry"))).collect::<Result<Vec<_>>>()?);
        }
        out.insert(name.clone(), Coupon { source, target, entries });
    }
    Ok(out)
}

/// A matrix entry: an integer, a `"n/d"` string, or an array of such
/// coordinates in powers of `ζ`.
fn scalar_coords(v: &Value) -> Option<Vec<BigRational>> {
    match v {
        Value::Array(a) => a.iter().map(rational).collect(),
        _ => Some(vec![rational(v)?]),
    }
}

fn rational(v: &Value) -> Option<BigRational> {
    match v {
        Value::Number(n) => Some(BigRational::from_integer(BigInt::from(n.as_i64()?))),
        Value::String(s) => {
            let s = s.trim();
            match s.split_once('/') {
                Some((n, d)) => {
                    let d: BigInt = d.trim().parse().ok()?;
                    if num_traits::Zero::is_zero(&d) {
                        return None;
                    }
                    Some(BigRational::new(n.trim().parse().ok()?, d))
                }
                None => Some(BigRational::from_integer(s.parse().ok()?)),
            }
        }
        _ => None,
    }
}

fn syntax(message: impl Into<String>) -> Error {
    Error::Syntax { span: Span { line: 0, column: 0 }, message: message.into() }
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Syntax { span: Span { line: e.line(), column: e.column() }, message: e.to_string() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        assert_eq!(parse_label("V3*").unwrap(), ObjectLabel::Blue(ModLabel::V(3).dual()));
        assert_eq!(parse_label("red").unwrap(), ObjectLabel::Red);
        assert!(parse_label("red*").is_err());
        assert!(parse_label("(red(x)V1)").is_err());
        assert!(parse_label("Q1").is_err());
    }

    #[test]
    fn syntax_errors_have_positions() {
        match parse_diagram("id(V1);\n  foo(V1)") {
            Err(Error::Syntax { span, .. }) => assert_eq!((span.line, span.column), (2, 3)),
            other => panic!("unexpected {:?}", other),
        }
        assert!(parse_diagram("id(V1").is_err());
        assert!(parse_diagram("x+(V1)").is_err());
    }

    #[test]
    fn empty_and_comments() {
        let d = parse_diagram("# nothing here\n").unwrap();
        assert!(d.slices.is_empty());
        let d = parse_diagram("lcoev(V1); # cup\nrev(V1);").unwrap();
        assert_eq!(d.slices.len(), 2);
    }

    #[test]
    fn json_forms_agree() {
        let a = parse_diagram("lcoev(V2); x+(V2,V2*); rev(V2)");
        assert!(a.is_err());
        let t = parse_diagram("lcoev(V2); tw+(V2), id(V2*); rev(V2)").unwrap();
        let j = parse_diagram_json(
            r#"{"slices": [["lcoev(V2)"], [{"gen": "tw+", "labels": ["V2"]}, "id(V2*)"], ["rev(V2)"]]}"#,
        )
        .unwrap();
        assert_eq!(t.to_text(), j.to_text());
    }

    #[test]
    fn coupons() {
        let table = r#"{"f": {"source": ["V1"], "target": ["V1"], "matrix": [[2, 0], [0, "1/2"]]},
                        "g": {"source": ["red"], "target": ["red"], "matrix": [[1]]}}"#;
        assert!(matches!(parse_diagram_with_coupons("id(V1)", Some(table)), Err(Error::RedInCoupon(_))));
        let table = r#"{"f": {"source": ["V1"], "target": ["V1"], "matrix": [[2, 0], [0, "1/2"]]}}"#;
        let d = parse_diagram_with_coupons("lcoev(V1); coup(f), id(V1*); rev(V1)", Some(table)).unwrap();
        assert!(d.is_closed().unwrap());
        assert!(matches!(parse_diagram("coup(h)"), Err(Error::UnknownCoupon(_))));
    }
}
