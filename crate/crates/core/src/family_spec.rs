//! The compact family-spec grammar used on the command line:
//!
//! ```text
//! spec  := name [ "(" [ arg { "," arg } ] ")" ]
//! arg   := key "=" ( integer | spec )
//! name  := letter { letter | digit | "-" | "_" }
//! ```
//!
//! `T` and `S` arguments of `umin`/`umax` are nested specs whose scale defaults
//! to the block they fill; inside `S`, `luk` and `drastic` mean the t-conorms.

use crate::catalog::{make, Family, FamilySpec};
use crate::chain::ChainScale;
use crate::error::{ParseError, Result};
use crate::uninorm::Uninorm;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Value {
    Int(usize, usize),
    Spec(Expr),
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Expr {
    name: String,
    pos: usize,
    args: Vec<(String, usize, Value)>,
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, pos: usize, msg: impl Into<String>) -> ParseError {
        ParseError::new(1, pos + 1, msg).with_source(self.src)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(self.pos, format!("expected '{}'", c as char)))
        }
    }

    fn ident(&mut self) -> Result<(String, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.bytes.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() => {}
            _ => return Err(self.err(start, "expected a name")),
        }
        while let Some(&c) = self.bytes.get(self.pos) {
            if c.is_ascii_alphanumeric() || c == b'-' || c == b'_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((self.src[start..self.pos].to_ascii_lowercase(), start))
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let (name, pos) = self.ident()?;
        let mut args = Vec::new();
        if self.peek() == Some(b'(') {
            self.pos += 1;
            if self.peek() == Some(b')') {
                self.pos += 1;
            } else {
                loop {
                    let (key, kpos) = self.ident()?;
                    if args.iter().any(|(k, _, _)| *k == key) {
                        return Err(self.err(kpos, format!("duplicate argument '{key}'")));
                    }
                    self.expect(b'=')?;
                    let value = match self.peek() {
                        Some(c) if c.is_ascii_digit() => {
                            let start = self.pos;
                            while self.bytes.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                                self.pos += 1;
                            }
                            let v = self.src[start..self.pos]
                                .parse()
                                .map_err(|_| self.err(start, "integer too large"))?;
                            Value::Int(v, start)
                        }
                        _ => Value::Spec(self.expr()?),
                    };
                    args.push((key, kpos, value));
                    match self.peek() {
                        Some(b',') => self.pos += 1,
                        Some(b')') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(self.err(self.pos, "expected ',' or ')'")),
                    }
                }
            }
        }
        Ok(Expr { name, pos, args })
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    Top,
    TNorm(usize),
    TConorm(usize),
}

struct Resolver<'a> {
    src: &'a str,
}

impl Resolver<'_> {
    fn err(&self, pos: usize, msg: impl Into<String>) -> ParseError {
        ParseError::new(1, pos + 1, msg).with_source(self.src)
    }

    fn int_arg(&self, ex: &Expr, key: &str) -> Result<Option<(usize, usize)>, ParseError> {
        match ex.args.iter().find(|(k, _, _)| k == key) {
            None => Ok(None),
            Some((_, _, Value::Int(v, p))) => Ok(Some((*v, *p))),
            Some((_, p, Value::Spec(_))) => Err(self.err(*p, format!("'{key}' must be an integer"))),
        }
    }

    fn resolve(&self, ex: &Expr, slot: Slot) -> Result<FamilySpec, ParseError> {
        use Family::*;
        let (family, kind, allowed): (Option<Family>, Kind, &[&str]) = match (ex.name.as_str(), slot) {
            ("min" | "tnorm-min", Slot::Top | Slot::TNorm(_)) => (Some(Min), Kind::TNorm, &["n", "e"]),
            ("max" | "tconorm-max", Slot::Top | Slot::TConorm(_)) => (Some(Max), Kind::TConorm, &["n", "e"]),
            ("luk" | "lukasiewicz", Slot::Top | Slot::TNorm(_)) | ("lukasiewicz-tnorm" | "luk-t", _) => {
                (Some(LukasiewiczTNorm), Kind::TNorm, &["n", "e"])
            }
            ("luk" | "lukasiewicz", Slot::TConorm(_))
            | ("lukasiewicz-tconorm" | "luk-s" | "bounded-sum", _) => {
                (Some(LukasiewiczTConorm), Kind::TConorm, &["n", "e"])
            }
            ("drastic", Slot::Top | Slot::TNorm(_)) | ("drastic-tnorm", _) => {
                (Some(DrasticTNorm), Kind::TNorm, &["n", "e"])
            }
            ("drastic", Slot::TConorm(_)) | ("drastic-tconorm", _) => {
                (Some(DrasticTConorm), Kind::TConorm, &["n", "e"])
            }
            ("umin-idempotent" | "idemmin" | "idem-min", _) => (Some(UminIdempotent), Kind::Proper, &["n", "e"]),
            ("umax-idempotent" | "idemmax" | "idem-max", _) => (Some(UmaxIdempotent), Kind::Proper, &["n", "e"]),
            ("umin-of" | "umin", _) => (None, Kind::UminOf, &["n", "e", "t", "s"]),
            ("umax-of" | "umax", _) => (None, Kind::UmaxOf, &["n", "e", "t", "s"]),
            ("luk-upper", _) => (None, Kind::LukUpper, &["n", "e"]),
            ("luk-lower", _) => (None, Kind::LukLower, &["n", "e"]),
            ("min" | "tnorm-min", Slot::TConorm(_)) => {
                return Err(self.err(ex.pos, "min is not a t-conorm; S needs e.g. max, luk, drastic"))
            }
            ("max" | "tconorm-max", Slot::TNorm(_)) => {
                return Err(self.err(ex.pos, "max is not a t-norm; T needs e.g. min, luk, drastic"))
            }
            (other, _) => return Err(self.err(ex.pos, format!("unknown family '{other}'"))),
        };
        for (k, p, _) in &ex.args {
            if !allowed.contains(&k.as_str()) {
                return Err(self.err(*p, format!("'{}' takes no argument '{k}'", ex.name)));
            }
        }

        let n = match (self.int_arg(ex, "n")?, slot) {
            (Some((v, p)), Slot::TNorm(m) | Slot::TConorm(m)) if v != m => {
                return Err(self.err(p, format!("nested operation must live on L_{m}, got n={v}")))
            }
            (Some((v, p)), _) => (v, p),
            (None, Slot::TNorm(m) | Slot::TConorm(m)) => (m, ex.pos),
            (None, Slot::Top) => return Err(self.err(ex.pos, format!("'{}' needs n=<scale>", ex.name))),
        };
        let scale = ChainScale::new(n.0).map_err(|e| self.err(n.1, e.to_string()))?;
        let e_arg = self.int_arg(ex, "e")?;
        let e = match (kind, e_arg) {
            (Kind::TNorm, None) => n.0,
            (Kind::TConorm, None) => 0,
            (_, Some((v, _))) => v,
            (_, None) => return Err(self.err(ex.pos, format!("'{}' needs e=<neutral>", ex.name))),
        };
        let e_pos = e_arg.map_or(ex.pos, |(_, p)| p);
        let sem = |r: crate::error::Result<FamilySpec>| r.map_err(|err| self.err(e_pos, err.to_string()));

        let spec = match kind {
            Kind::TNorm | Kind::TConorm | Kind::Proper => {
                FamilySpec::new(family.expect("simple family"), scale, e)
            }
            Kind::UminOf | Kind::UmaxOf | Kind::LukUpper | Kind::LukLower => {
                if e == 0 || e >= n.0 {
                    return Err(self.err(e_pos, format!("needs a proper neutral element 0 < e < {}", n.0)));
                }
                let default_t = Expr { name: "min".into(), pos: ex.pos, args: vec![] };
                let default_s = Expr { name: "max".into(), pos: ex.pos, args: vec![] };
                let luk = Expr { name: "luk".into(), pos: ex.pos, args: vec![] };
                let (t_ex, s_ex) = match kind {
                    Kind::LukUpper => (default_t, luk),
                    Kind::LukLower => (luk, default_s),
                    _ => (
                        self.sub_expr(ex, "t")?.unwrap_or(default_t),
                        self.sub_expr(ex, "s")?.unwrap_or(default_s),
                    ),
                };
                let t = self.build(&t_ex, Slot::TNorm(e))?;
                let s = self.build(&s_ex, Slot::TConorm(n.0 - e))?;
                if !t.is_tnorm() {
                    return Err(self.err(t_ex.pos, "T must be a t-norm"));
                }
                if !s.is_tconorm() {
                    return Err(self.err(s_ex.pos, "S must be a t-conorm"));
                }
                match kind {
                    Kind::UminOf | Kind::LukUpper => FamilySpec::umin_of(t, s, scale, e),
                    _ => FamilySpec::umax_of(t, s, scale, e),
                }
            }
        };
        sem(spec.check().map(|_| spec))
    }

    fn sub_expr(&self, ex: &Expr, key: &str) -> Result<Option<Expr>, ParseError> {
        match ex.args.iter().find(|(k, _, _)| k == key) {
            None => Ok(None),
            Some((_, _, Value::Spec(s))) => Ok(Some(s.clone())),
            Some((_, p, Value::Int(..))) => {
                Err(self.err(*p, format!("'{}' must be a family spec", key.to_ascii_uppercase())))
            }
        }
    }

    fn build(&self, ex: &Expr, slot: Slot) -> Result<Uninorm, ParseError> {
        let spec = self.resolve(ex, slot)?;
        make(&spec).map_err(|err| self.err(ex.pos, err.to_string()))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    TNorm,
    TConorm,
    Proper,
    UminOf,
    UmaxOf,
    LukUpper,
    LukLower,
}

/// Parses a family spec such as `umin(T=luk,S=max,e=2,n=4)`.
pub fn parse_family_spec(src: &str) -> Result<FamilySpec, ParseError> {
    let mut p = Parser { src, bytes: src.as_bytes(), pos: 0 };
    let ex = p.expr()?;
    p.skip_ws();
    if p.pos != src.len() {
        return Err(p.err(p.pos, "unexpected trailing input"));
    }
    Resolver { src }.resolve(&ex, Slot::Top)
}

/// Parses and constructs in one step.
pub fn build_family(src: &str) -> crate::error::Result<Uninorm> {
    let spec = parse_family_spec(src)?;
    make(&spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{idem_min, luk_upper, lukasiewicz_tconorm, lukasiewicz_tnorm, max_tconorm};

    fn l(n: usize) -> ChainScale {
        ChainScale::new(n).unwrap()
    }

    #[test]
    fn parses_catalog_families() {
        assert_eq!(build_family("idemmin(e=2,n=4)").unwrap(), idem_min(l(4), 2).unwrap());
        assert_eq!(build_family("luk-upper(e=2,n=4)").unwrap(), luk_upper(l(4), 2).unwrap());
        assert_eq!(build_family("luk(n=3)").unwrap(), lukasiewicz_tnorm(l(3)));
        assert_eq!(build_family("bounded-sum(n=3)").unwrap(), lukasiewicz_tconorm(l(3)));
        assert_eq!(build_family("max(n=2)").unwrap(), max_tconorm(l(2)));
        assert_eq!(build_family(" min ( n = 4 , e = 4 ) ").unwrap().neutral(), 4);
        for s in [
            "lukasiewicz-tconorm(n=3)",
            "drastic-tnorm(n=3)",
            "drastic-tconorm(n=3)",
            "umax-idempotent(n=4,e=1)",
            "umin-idempotent(n=4,e=3)",
            "umax-of(T=drastic,S=luk,e=2,n=5)",
            "umin-of(T=luk,S=drastic,e=3,n=5)",
            "luk-lower(e=1,n=3)",
        ] {
            build_family(s).unwrap_or_else(|e| panic!("{s}: {e}"));
        }
    }

    #[test]
    fn nested_sub_operations_fill_their_blocks() {
        let u = build_family("umin(T=luk,S=max,e=2,n=4)").unwrap();
        assert_eq!(u.get(1, 1), 0);
        assert_eq!(u.get(3, 4), 4);
        assert_eq!(u.get(1, 3), 1);
        let v = build_family("umin(T=luk(n=2),S=max(n=2),e=2,n=4)").unwrap();
        assert_eq!(u, v);
    }

    #[test]
    fn errors_carry_caret_positions() {
        let err = parse_family_spec("umin(T=luk,S=min,e=2,n=4)").unwrap_err();
        assert_eq!(err.column, 14);
        assert!(err.to_string().contains("not a t-conorm"));
        assert!(err.to_string().contains("\n  umin(T=luk,S=min,e=2,n=4)\n               ^"));

        let err = parse_family_spec("idemmin(e=2,n=4").unwrap_err();
        assert_eq!(err.column, 16);
        let err = parse_family_spec("foo(n=2)").unwrap_err();
        assert_eq!(err.column, 1);
        let err = parse_family_spec("min(n=4,q=1)").unwrap_err();
        assert_eq!(err.column, 9);
        let err = parse_family_spec("min(n=4,n=4)").unwrap_err();
        assert!(err.message.contains("duplicate"));
        let err = parse_family_spec("min(n=4,e=2)").unwrap_err();
        assert_eq!(err.column, 11);
        let err = parse_family_spec("umin(T=luk(n=3),e=2,n=4)").unwrap_err();
        assert!(err.message.contains("L_2"));
        let err = parse_family_spec("idemmin(n=4)").unwrap_err();
        assert!(err.message.contains("needs e"));
        let err = parse_family_spec("min(n=4) x").unwrap_err();
        assert_eq!(err.column, 10);
        assert!(parse_family_spec("").is_err());
        assert!(parse_family_spec("min(n=0)").is_err());
    }
}
