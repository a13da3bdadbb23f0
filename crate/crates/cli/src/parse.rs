//! Polynomial expression parser.
//!
//! Grammar: integers, variable names, `+ - * ^`, parentheses. Multiplication
//! is always explicit (`2*x`, never `2x`). `^` takes a nonnegative integer
//! exponent and binds tighter than `*`, which binds tighter than `+`/`-`;
//! a leading `-` negates the first term.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use syzygy_core::poly::{AffinePoly, HomogeneousPoly};
use syzygy_core::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        position,
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'+' => {
                out.push((Token::Plus, i));
                i += 1;
            }
            b'-' => {
                out.push((Token::Minus, i));
                i += 1;
            }
            b'*' => {
                out.push((Token::Star, i));
                i += 1;
            }
            b'^' => {
                out.push((Token::Caret, i));
                i += 1;
            }
            b'(' => {
                out.push((Token::LParen, i));
                i += 1;
            }
            b')' => {
                out.push((Token::RParen, i));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let value = BigInt::from_str(&text[start..i]).expect("digits");
                out.push((Token::Int(value), start));
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Token::Ident(text[start..i].to_string()), start));
            }
            _ => return err(i, format!("unexpected character {:?}", b as char)),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    variables: &'a [String],
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|&(_, p)| p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn nvars(&self) -> usize {
        self.variables.len()
    }

    fn expr(&mut self) -> Result<AffinePoly, ParseError> {
        let negated = matches!(self.peek(), Some(Token::Minus));
        if negated {
            self.bump();
        }
        let mut acc = self.term()?;
        if negated {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(Token::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<AffinePoly, ParseError> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.bump();
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<AffinePoly, ParseError> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.bump();
            let at = self.here();
            match self.bump() {
                Some(Token::Int(e)) => {
                    let exponent: u32 =
                        e.try_into()
                            .ok()
                            .filter(|&e| e <= 4096)
                            .ok_or_else(|| ParseError {
                                position: at,
                                message: "exponent must be an integer in 0..=4096".into(),
                            })?;
                    Ok(base.pow(exponent))
                }
                _ => err(at, "expected a nonnegative integer exponent after '^'"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<AffinePoly, ParseError> {
        let at = self.here();
        match self.bump() {
            Some(Token::Int(n)) => Ok(AffinePoly::constant(
                self.nvars(),
                Rational::from_integer(n),
            )),
            Some(Token::Ident(name)) => match self.variables.iter().position(|v| *v == name) {
                Some(i) => Ok(AffinePoly::var(self.nvars(), i)),
                None => err(at, format!("unknown variable '{name}'")),
            },
            Some(Token::LParen) => {
                let inner = self.expr()?;
                let at = self.here();
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => err(at, "expected ')'"),
                }
            }
            Some(tok) => err(at, format!("unexpected token {tok:?}")),
            None => err(at, "unexpected end of expression"),
        }
    }
}

/// Parse an expression over the given variables (mixed degrees allowed).
pub fn parse_affine(text: &str, variables: &[String]) -> Result<AffinePoly, ParseError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        variables,
        end: text.len(),
    };
    let poly = parser.expr()?;
    if parser.pos < parser.tokens.len() {
        let at = parser.here();
        return err(
            at,
            "expected '+', '-', '*', '^', or end of expression (multiplication must be explicit)",
        );
    }
    Ok(poly)
}

/// Parse and validate a homogeneous polynomial; non-homogeneous input is
/// rejected with the offending monomials listed.
pub fn parse_poly(text: &str, variables: &[String]) -> Result<HomogeneousPoly, ParseError> {
    let poly = parse_affine(text, variables)?;
    let names: Vec<&str> = variables.iter().map(String::as_str).collect();
    let degrees: std::collections::BTreeSet<u32> =
        poly.terms().map(|(e, _)| e.total_degree()).collect();
    if degrees.len() > 1 {
        let listing: Vec<String> = degrees
            .iter()
            .map(|&d| {
                format!(
                    "degree {d}: {}",
                    poly.part_of_degree(d).to_expression(&names)
                )
            })
            .collect();
        return err(
            0,
            format!("polynomial is not homogeneous ({})", listing.join("; ")),
        );
    }
    Ok(HomogeneousPoly::from_affine(&poly).expect("single degree"))
}

/// Parse one rational number, "p" or "p/q".
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    Rational::from_str(text.trim()).map_err(|e| format!("invalid rational '{}': {e}", text.trim()))
}

/// Parse a projective point "[a, b, c]" with rational entries.
pub fn parse_point(text: &str) -> Result<Vec<Rational>, String> {
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| format!("expected a bracketed point like [1,0,-1], got '{t}'"))?;
    inner.split(',').map(parse_rational).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use syzygy_core::rational::{rat, ratio};

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_cayley() {
        let v = vars(&["x", "y", "z", "w"]);
        let f = parse_poly("x*y*z+x*y*w+x*z*w+y*z*w", &v).unwrap();
        assert_eq!(f.degree(), 3);
        assert_eq!(f.num_terms(), 4);
    }

    #[test]
    fn parses_generic_cayley_with_parentheses() {
        let v = vars(&["x", "y", "z", "w"]);
        let f = parse_poly("4*(x^3+y^3+z^3+w^3)-(x+y+z+w)^3", &v).unwrap();
        assert_eq!(f.degree(), 3);
        // coefficient of x^3 is 4 - 1 = 3
        assert_eq!(
            f.coefficient(&syzygy_core::poly::Exponents(vec![3, 0, 0, 0])),
            rat(3)
        );
        assert_eq!(
            f.coefficient(&syzygy_core::poly::Exponents(vec![1, 1, 1, 0])),
            rat(-6)
        );
    }

    #[test]
    fn rejects_non_homogeneous_with_listing() {
        let v = vars(&["x", "y"]);
        let e = parse_poly("x^2+y", &v).unwrap_err();
        assert!(e.message.contains("not homogeneous"));
        assert!(e.message.contains("degree 1: y"));
        assert!(e.message.contains("degree 2: x^2"));
    }

    #[test]
    fn rejects_implicit_multiplication() {
        let v = vars(&["x", "y"]);
        let e = parse_affine("2x", &v).unwrap_err();
        assert_eq!(e.position, 1);
        assert!(e.message.contains("explicit"));
    }

    #[test]
    fn reports_unknown_variable_position() {
        let v = vars(&["x", "y"]);
        let e = parse_affine("x*t", &v).unwrap_err();
        assert_eq!(e.position, 2);
        assert!(e.message.contains("unknown variable 't'"));
    }

    #[test]
    fn unary_minus_binds_to_term() {
        let v = vars(&["x", "y"]);
        let p = parse_affine("-x^2+y^2", &v).unwrap();
        assert_eq!(
            p.coefficient(&syzygy_core::poly::Exponents(vec![2, 0])),
            rat(-1)
        );
    }

    #[test]
    fn point_syntax() {
        assert_eq!(
            parse_point("[-1, 1/2, 0]").unwrap(),
            vec![rat(-1), ratio(1, 2), rat(0)]
        );
        assert!(parse_point("1,2").is_err());
        assert!(parse_point("[1,a]").is_err());
    }
}
