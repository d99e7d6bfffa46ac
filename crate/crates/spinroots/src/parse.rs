//! Expression parser for polynomial input.
//!
//! Accepts one-variable algebraic expressions over signed decimal or
//! rational literals with `+ - * ^` and parentheses, e.g.
//! `(x-1)*(x-2)*(x-3)` or `x^2 - 1/2`. Implicit multiplication between a
//! literal and the variable (`3x`) is accepted. Expansion is exact: the
//! result is a rational-coefficient polynomial.

use num::rational::BigRational;
use num::traits::{Signed, ToPrimitive};
use thiserror::Error;

use crate::poly::Polynomial;
use crate::scalar::rational_from_str;

/// Exponents above this reject the input; guards the dense representation.
pub const MAX_EXPONENT: u32 = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("exponent at position {pos} is not a nonnegative integer")]
    BadExponent { pos: usize },
    #[error("exponent at position {pos} exceeds the maximum of {MAX_EXPONENT}")]
    ExponentTooLarge { pos: usize },
    #[error("more than one variable symbol: `{first}` and `{second}` at position {pos}")]
    MultipleVariables {
        first: String,
        second: String,
        pos: usize,
    },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Number(BigRational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    pos: usize, // 1-based character position
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let pos = i + 1;
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Spanned {
                    tok: Tok::Plus,
                    pos,
                });
                i += 1;
            }
            '-' | '\u{2212}' => {
                out.push(Spanned {
                    tok: Tok::Minus,
                    pos,
                });
                i += 1;
            }
            '*' => {
                out.push(Spanned {
                    tok: Tok::Star,
                    pos,
                });
                i += 1;
            }
            '^' => {
                out.push(Spanned {
                    tok: Tok::Caret,
                    pos,
                });
                i += 1;
            }
            '(' => {
                out.push(Spanned {
                    tok: Tok::LParen,
                    pos,
                });
                i += 1;
            }
            ')' => {
                out.push(Spanned {
                    tok: Tok::RParen,
                    pos,
                });
                i += 1;
            }
            _ if c.is_ascii_digit() || (c == '.' && next_is_digit(&chars, i + 1)) => {
                let (tok, next) = lex_number(&chars, i)?;
                out.push(Spanned { tok, pos });
                i = next;
            }
            _ if c.is_alphabetic() || c == '_' => {
                let mut j = i + 1;
                while j < chars.len() && (chars[j].is_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                let name: String = chars[i..j].iter().collect();
                out.push(Spanned {
                    tok: Tok::Ident(name),
                    pos,
                });
                i = j;
            }
            _ => {
                return Err(ParseError::Syntax {
                    pos,
                    message: format!("unexpected character `{c}`"),
                })
            }
        }
    }
    Ok(out)
}

fn next_is_digit(chars: &[char], i: usize) -> bool {
    chars.get(i).map(|c| c.is_ascii_digit()).unwrap_or(false)
}

/// Scan a decimal literal with optional fractional part, scientific
/// exponent, and `/denominator` suffix (a rational literal).
fn lex_number(chars: &[char], start: usize) -> Result<(Tok, usize), ParseError> {
    let mut i = scan_decimal(chars, start);
    // scientific part: only consume `e`/`E` when digits actually follow
    if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
        let mut j = i + 1;
        if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
            j += 1;
        }
        if next_is_digit(chars, j) {
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            i = j;
        }
    }
    let mut text: String = chars[start..i].iter().collect();
    // rational literal: numerator already scanned, denominator follows `/`
    if i < chars.len() && chars[i] == '/' && next_is_digit(chars, i + 1) {
        let den_start = i + 1;
        let den_end = scan_decimal(chars, den_start);
        let den: String = chars[den_start..den_end].iter().collect();
        text = format!("{text}/{den}");
        i = den_end;
    }
    let value = rational_from_str(&text).ok_or(ParseError::Syntax {
        pos: start + 1,
        message: format!("malformed number `{text}`"),
    })?;
    Ok((Tok::Number(value), i))
}

fn scan_decimal(chars: &[char], start: usize) -> usize {
    let mut i = start;
    while i < chars.len() && chars[i].is_ascii_digit() {
        i += 1;
    }
    if i < chars.len() && chars[i] == '.' {
        i += 1;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
    }
    i
}

struct Parser {
    toks: Vec<Spanned>,
    at: usize,
    variable: Option<String>,
    end_pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.at)
    }

    fn advance(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.at).cloned();
        if t.is_some() {
            self.at += 1;
        }
        t
    }

    fn here(&self) -> usize {
        self.peek().map(|s| s.pos).unwrap_or(self.end_pos)
    }

    fn expr(&mut self) -> Result<Polynomial<BigRational>, ParseError> {
        let mut acc = self.term()?;
        while let Some(s) = self.peek() {
            match s.tok {
                Tok::Plus => {
                    self.advance();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.advance();
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial<BigRational>, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek().map(|s| s.tok.clone()) {
                Some(Tok::Star) => {
                    self.advance();
                    acc = acc.mul(&self.unary()?);
                }
                // implicit multiplication: `3x`, `3(x+1)`, `x(x-1)`
                Some(Tok::Number(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    acc = acc.mul(&self.power()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial<BigRational>, ParseError> {
        match self.peek().map(|s| s.tok.clone()) {
            Some(Tok::Minus) => {
                self.advance();
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.advance();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial<BigRational>, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek().map(|s| s.tok.clone()) {
            self.advance();
            let exp = self.exponent()?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        let pos = self.here();
        match self.advance().map(|s| s.tok) {
            Some(Tok::Minus) => {
                // consume the literal so the error names the exponent position
                let _ = self.advance();
                Err(ParseError::BadExponent { pos })
            }
            Some(Tok::Number(n)) => {
                if !n.is_integer() || n.is_negative() {
                    return Err(ParseError::BadExponent { pos });
                }
                let v = n.to_u32().ok_or(ParseError::ExponentTooLarge { pos })?;
                if v > MAX_EXPONENT {
                    return Err(ParseError::ExponentTooLarge { pos });
                }
                Ok(v)
            }
            _ => Err(ParseError::Syntax {
                pos,
                message: "expected an integer exponent after `^`".into(),
            }),
        }
    }

    fn atom(&mut self) -> Result<Polynomial<BigRational>, ParseError> {
        let pos = self.here();
        match self.advance().map(|s| s.tok) {
            Some(Tok::Number(n)) => Ok(Polynomial::constant(n)),
            Some(Tok::Ident(name)) => {
                match &self.variable {
                    None => self.variable = Some(name),
                    Some(v) if *v == name => {}
                    Some(v) => {
                        return Err(ParseError::MultipleVariables {
                            first: v.clone(),
                            second: name,
                            pos,
                        })
                    }
                }
                Ok(Polynomial::identity())
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.advance().map(|s| s.tok) {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(ParseError::Syntax {
                        pos: self.here(),
                        message: "expected `)`".into(),
                    }),
                }
            }
            Some(other) => Err(ParseError::Syntax {
                pos,
                message: format!("unexpected token `{other:?}`"),
            }),
            None => Err(ParseError::Syntax {
                pos,
                message: "unexpected end of input".into(),
            }),
        }
    }
}

/// Parse and expand an expression into a dense rational polynomial.
pub fn parse(text: &str) -> Result<Polynomial<BigRational>, ParseError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(ParseError::Syntax {
            pos: 1,
            message: "empty expression".into(),
        });
    }
    let end_pos = text.chars().count() + 1;
    let mut p = Parser {
        toks,
        at: 0,
        variable: None,
        end_pos,
    };
    let poly = p.expr()?;
    if let Some(s) = p.peek() {
        return Err(ParseError::Syntax {
            pos: s.pos,
            message: "trailing input after expression".into(),
        });
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn coeffs(text: &str) -> Vec<BigRational> {
        parse(text).unwrap().coeffs().to_vec()
    }

    #[test]
    fn expands_simple_quadratic() {
        assert_eq!(coeffs("x^2-1"), vec![rat(-1, 1), rat(0, 1), rat(1, 1)]);
    }

    #[test]
    fn expands_product_of_linear_factors() {
        // independently checked against direct root expansion
        let parsed = parse("(x-1)*(x-2)*(x-3)").unwrap();
        let expanded = Polynomial::from_roots(&[rat(1, 1), rat(2, 1), rat(3, 1)]);
        assert_eq!(parsed, expanded);
        assert_eq!(
            parsed.coeffs(),
            &[rat(-6, 1), rat(11, 1), rat(-6, 1), rat(1, 1)]
        );
    }

    #[test]
    fn rejects_two_variables() {
        match parse("x^2 + y") {
            Err(ParseError::MultipleVariables { first, second, pos }) => {
                assert_eq!(first, "x");
                assert_eq!(second, "y");
                assert_eq!(pos, 7);
            }
            other => panic!("expected MultipleVariables, got {other:?}"),
        }
    }

    #[test]
    fn implicit_multiplication() {
        assert_eq!(coeffs("3x"), vec![rat(0, 1), rat(3, 1)]);
        assert_eq!(coeffs("3(x+1)"), vec![rat(3, 1), rat(3, 1)]);
        assert_eq!(coeffs("x(x+1)"), vec![rat(0, 1), rat(1, 1), rat(1, 1)]);
    }

    #[test]
    fn rational_and_scientific_literals() {
        assert_eq!(coeffs("2/3*x - 4/3"), vec![rat(-4, 3), rat(2, 3)]);
        assert_eq!(coeffs("1.5e1*x"), vec![rat(0, 1), rat(15, 1)]);
        assert_eq!(coeffs("0.5 + .25"), vec![rat(3, 4)]);
    }

    #[test]
    fn exponent_errors() {
        assert!(matches!(parse("x^-2"), Err(ParseError::BadExponent { .. })));
        assert!(matches!(
            parse("x^1.5"),
            Err(ParseError::BadExponent { .. })
        ));
        assert!(matches!(
            parse("x^65"),
            Err(ParseError::ExponentTooLarge { .. })
        ));
        assert_eq!(parse("x^64").unwrap().degree(), Some(64));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse("x +* 2") {
            Err(ParseError::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected Syntax error, got {other:?}"),
        }
        match parse("(x+1") {
            Err(ParseError::Syntax { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("expected Syntax error, got {other:?}"),
        }
        assert!(matches!(parse(""), Err(ParseError::Syntax { pos: 1, .. })));
        assert!(matches!(
            parse("x$1"),
            Err(ParseError::Syntax { pos: 2, .. })
        ));
    }

    #[test]
    fn unary_signs() {
        assert_eq!(coeffs("-x^2 + -1"), vec![rat(-1, 1), rat(0, 1), rat(-1, 1)]);
        assert_eq!(coeffs("+x"), vec![rat(0, 1), rat(1, 1)]);
        assert_eq!(coeffs("2*-x"), vec![rat(0, 1), rat(-2, 1)]);
    }

    #[test]
    fn pretty_print_reparse_is_idempotent() {
        for text in ["(x-1)*(x-2)*(x-3)", "x^2 - 1/2", "-3x + 0.75", "x^5"] {
            let once = parse(text).unwrap();
            let twice = parse(&once.to_string()).unwrap();
            assert_eq!(once, twice);
            assert_eq!(once.to_string(), twice.to_string());
        }
    }
}
