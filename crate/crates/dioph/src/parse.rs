//! Equation and polynomial parsing.
//!
//! Grammar, whitespace-insensitive:
//!
//! ```text
//! equation   ::= expression ['=' expression]
//! expression ::= ['+'|'-'] term (('+'|'-') term)*
//! term       ::= atom (['*'] atom)*
//! atom       ::= integer | variable ['^' integer] | '(' expression ')' ['^' integer]
//! ```
//!
//! Equation variables are `x y z t s` or indexed `x1 x2 ...` (with `x = x1`,
//! `y = x2`, and so on); family parameters use `u v w` or `u1 u2 ...`.
//! A right-hand side is moved to the left, so `y^2+z^2 = x^3-1` parses to
//! `y^2+z^2-x^3+1`. Parenthesized groups and implicit multiplication
//! (`2x`, `y(x+1)`) are accepted on input; serialized output always uses
//! explicit `*` and no parentheses.
//!
//! Equations are compressed to their used variables and rejected when
//! degenerate: all terms cancelling, or no variable surviving.

use crate::poly::Polynomial;
use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use thiserror::Error;

/// Highest accepted variable index (`x64`) and exponent.
pub const MAX_VAR_INDEX: usize = 64;
pub const MAX_EXPONENT: u32 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("degenerate equation: all terms cancel")]
    AllTermsCancel,
    #[error("degenerate equation: constant {value} = 0 has no variables")]
    ConstantEquation { value: BigInt },
    #[error("variable index {index} exceeds the supported maximum {max}")]
    VariableIndexTooLarge { index: usize, max: usize },
    #[error("component uses parameter index {index} but the family has {arity} parameters")]
    VariableOutOfRange { index: usize, arity: usize },
}

fn syntax(position: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { position, message: message.into() }
}

/// Which letters name variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarStyle {
    /// `x y z t s`, indexed form `x<k>`.
    Equation,
    /// `u v w`, indexed form `u<k>`.
    Parameter,
}

impl VarStyle {
    fn base_letter(self) -> char {
        match self {
            VarStyle::Equation => 'x',
            VarStyle::Parameter => 'u',
        }
    }

    fn plain_index(self, letter: char) -> Option<usize> {
        let letters: &[char] = match self {
            VarStyle::Equation => &['x', 'y', 'z', 't', 's'],
            VarStyle::Parameter => &['u', 'v', 'w'],
        };
        letters.iter().position(|&c| c == letter)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigUint),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Equals,
}

fn lex(text: &str, style: VarStyle) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '0'..='9' => {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                let n: BigUint = text[i..j].parse().expect("digits parse");
                toks.push((Tok::Int(n), start));
                i = j;
            }
            'a'..='z' | 'A'..='Z' => {
                let digits_follow = i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit();
                let index = if c == style.base_letter() && digits_follow {
                    let mut j = i + 1;
                    while j < bytes.len() && bytes[j].is_ascii_digit() {
                        j += 1;
                    }
                    let n: BigUint = text[i + 1..j].parse().expect("digits parse");
                    let k = n.to_usize().unwrap_or(usize::MAX);
                    if k == 0 {
                        return Err(syntax(start, "variable indices start at 1"));
                    }
                    if k > MAX_VAR_INDEX {
                        return Err(ParseError::VariableIndexTooLarge {
                            index: k,
                            max: MAX_VAR_INDEX,
                        });
                    }
                    i = j;
                    k - 1
                } else if let Some(k) = style.plain_index(c) {
                    if digits_follow {
                        return Err(syntax(
                            i + 1,
                            format!(
                                "unexpected digit after variable '{c}'; indexed variables are written {}<k>",
                                style.base_letter()
                            ),
                        ));
                    }
                    i += 1;
                    k
                } else {
                    return Err(syntax(start, format!("unknown variable '{c}'")));
                };
                toks.push((Tok::Var(index), start));
            }
            '+' => {
                toks.push((Tok::Plus, start));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, start));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, start));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, start));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, start));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, start));
                i += 1;
            }
            '=' => {
                toks.push((Tok::Equals, start));
                i += 1;
            }
            _ => return Err(syntax(start, format!("unexpected character '{c}'"))),
        }
    }
    Ok(toks)
}

struct Cursor {
    toks: Vec<(Tok, usize)>,
    i: usize,
    end: usize,
    nvars: usize,
}

impl Cursor {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |(_, p)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.i).map(|(t, _)| t.clone());
        if t.is_some() {
            self.i += 1;
        }
        t
    }
}

fn parse_exponent(cur: &mut Cursor) -> Result<u32, ParseError> {
    // Caller consumed '^'.
    let pos = cur.pos();
    match cur.bump() {
        Some(Tok::Int(n)) => {
            let e = n.to_u32().unwrap_or(u32::MAX);
            if e > MAX_EXPONENT {
                Err(syntax(pos, format!("exponent exceeds the supported maximum {MAX_EXPONENT}")))
            } else {
                Ok(e)
            }
        }
        _ => Err(syntax(pos, "exponent must be a nonnegative integer")),
    }
}

fn parse_atom(cur: &mut Cursor) -> Result<Polynomial, ParseError> {
    let pos = cur.pos();
    match cur.bump() {
        Some(Tok::Int(n)) => {
            if cur.peek() == Some(&Tok::Caret) {
                return Err(syntax(
                    cur.pos(),
                    "exponent must follow a variable or parenthesized group",
                ));
            }
            Ok(Polynomial::constant(BigInt::from(n), cur.nvars))
        }
        Some(Tok::Var(index)) => {
            let mut p = Polynomial::variable(index, cur.nvars);
            if cur.peek() == Some(&Tok::Caret) {
                cur.bump();
                p = p.pow(parse_exponent(cur)?);
            }
            Ok(p)
        }
        Some(Tok::LParen) => {
            let inner = parse_expression(cur)?;
            match cur.bump() {
                Some(Tok::RParen) => {}
                _ => return Err(syntax(cur.pos(), "expected ')'")),
            }
            if cur.peek() == Some(&Tok::Caret) {
                cur.bump();
                Ok(inner.pow(parse_exponent(cur)?))
            } else {
                Ok(inner)
            }
        }
        _ => Err(syntax(pos, "expected a number, variable, or '('")),
    }
}

fn starts_atom(tok: Option<&Tok>) -> bool {
    matches!(tok, Some(Tok::Int(_) | Tok::Var(_) | Tok::LParen))
}

fn parse_term(cur: &mut Cursor) -> Result<Polynomial, ParseError> {
    let mut acc = parse_atom(cur)?;
    loop {
        if cur.peek() == Some(&Tok::Star) {
            cur.bump();
            acc = acc.mul(&parse_atom(cur)?);
        } else if starts_atom(cur.peek()) {
            acc = acc.mul(&parse_atom(cur)?);
        } else {
            break;
        }
    }
    Ok(acc)
}

fn parse_expression(cur: &mut Cursor) -> Result<Polynomial, ParseError> {
    let mut total = Polynomial::zero(cur.nvars);
    let mut negative = match cur.peek() {
        Some(Tok::Plus) => {
            cur.bump();
            false
        }
        Some(Tok::Minus) => {
            cur.bump();
            true
        }
        _ => false,
    };
    loop {
        let term = parse_term(cur)?;
        total = if negative { total.sub(&term) } else { total.add(&term) };
        match cur.peek() {
            Some(Tok::Plus) => {
                cur.bump();
                negative = false;
            }
            Some(Tok::Minus) => {
                cur.bump();
                negative = true;
            }
            _ => return Ok(total),
        }
    }
}

fn cursor_for(text: &str, style: VarStyle) -> Result<Cursor, ParseError> {
    let toks = lex(text, style)?;
    let nvars = toks
        .iter()
        .filter_map(|(t, _)| match t {
            Tok::Var(i) => Some(i + 1),
            _ => None,
        })
        .max()
        .unwrap_or(0);
    Ok(Cursor { toks, i: 0, end: text.len(), nvars })
}

fn expect_end(cur: &Cursor) -> Result<(), ParseError> {
    if cur.i < cur.toks.len() {
        Err(syntax(cur.pos(), "unexpected trailing input"))
    } else {
        Ok(())
    }
}

/// Parses an equation `P = Q` (or a bare `P`, meaning `P = 0`) into the
/// reduced polynomial `P - Q` with unused variables compressed away.
///
/// Rejects degenerate equations: `P - Q` identically zero, or constant.
pub fn parse_equation(text: &str) -> Result<Polynomial, ParseError> {
    let mut cur = cursor_for(text, VarStyle::Equation)?;
    let lhs = parse_expression(&mut cur)?;
    let p = if cur.peek() == Some(&Tok::Equals) {
        cur.bump();
        let rhs = parse_expression(&mut cur)?;
        lhs.sub(&rhs)
    } else {
        lhs
    };
    expect_end(&cur)?;
    if p.is_zero() {
        return Err(ParseError::AllTermsCancel);
    }
    let (compressed, _) = p.compress_vars();
    if compressed.nvars() == 0 {
        let value = compressed.monomials()[0].coeff().clone();
        return Err(ParseError::ConstantEquation { value });
    }
    Ok(compressed)
}

/// Parses a bare polynomial expression (no `=`), keeping the variable space
/// exactly as written: `nvars` is the highest index mentioned. Constants and
/// zero are allowed.
pub fn parse_polynomial(text: &str, style: VarStyle) -> Result<Polynomial, ParseError> {
    let mut cur = cursor_for(text, style)?;
    let p = parse_expression(&mut cur)?;
    if cur.peek() == Some(&Tok::Equals) {
        return Err(syntax(cur.pos(), "'=' is not allowed in a polynomial expression"));
    }
    expect_end(&cur)?;
    Ok(p)
}

/// Parses one component of a `k`-parameter family in the parameter alphabet
/// `u v w / u<k>`. The result always has exactly `k` variables; mentioning a
/// parameter beyond `k` is an error.
pub fn parse_component(text: &str, arity: usize) -> Result<Polynomial, ParseError> {
    let p = parse_polynomial(text, VarStyle::Parameter)?;
    if p.nvars() > arity {
        return Err(ParseError::VariableOutOfRange { index: p.nvars(), arity });
    }
    Ok(p.pad_vars(arity))
}

/// Parses a comma- or space-separated tuple of integers.
pub fn parse_tuple(text: &str) -> Result<Vec<BigInt>, ParseError> {
    let mut out = Vec::new();
    for (i, piece) in text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .enumerate()
    {
        let v: BigInt = piece
            .trim()
            .parse()
            .map_err(|_| syntax(i, format!("invalid integer '{piece}'")))?;
        out.push(v);
    }
    Ok(out)
}

#[cfg(test)]
mod test {
    use super::*;
    use num_traits::ToPrimitive;

    fn h(text: &str) -> u64 {
        parse_equation(text).unwrap().size_h().to_u64().unwrap()
    }

    #[test]
    fn named_and_indexed_variables_agree() {
        let a = parse_equation("x^2*y + y^2*z + z^2*x - 1").unwrap();
        let b = parse_equation("x1^2*x2 + x2^2*x3 + x3^2*x1 - 1").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.size_h().to_u64(), Some(25));
    }

    #[test]
    fn right_hand_side_moves_left() {
        let a = parse_equation("y^2 + z^2 = x^3 - 1").unwrap();
        let b = parse_equation("y^2 + z^2 - x^3 + 1").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.size_h().to_u64(), Some(17));
    }

    #[test]
    fn implicit_multiplication_and_parentheses() {
        assert_eq!(h("2x + 1"), 5);
        assert_eq!(h("y(x^3 - z^2) - z"), h("x^3*y - y*z^2 - z"));
        assert_eq!(h("(3x - 1)y^2 + x*z^2 - x^3 + 2"), h("3xy^2 - y^2 + xz^2 - x^3 + 2"));
        assert_eq!(h("(x + 1)^2"), h("x^2 + 2x + 1"));
    }

    #[test]
    fn spec_sizes() {
        assert_eq!(h("x^3 + y^3 + z^3 - 3"), 27);
        assert_eq!(h("4x^5 + 4y^5 + 11z^5"), 608);
        assert_eq!(h("x^3 + y^3 + z^3 + t^3 + s^3"), 40);
        assert_eq!(h("x^2*y + y^2*z + z^2*t + t^2*s + s^2*x"), 40);
    }

    #[test]
    fn degenerate_equations_are_rejected() {
        assert!(matches!(parse_equation("x - x"), Err(ParseError::AllTermsCancel)));
        assert!(matches!(parse_equation("5 = 5"), Err(ParseError::AllTermsCancel)));
        assert!(matches!(
            parse_equation("x - x + 7"),
            Err(ParseError::ConstantEquation { .. })
        ));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_equation("x^2 + @") {
            Err(ParseError::Syntax { position, .. }) => assert_eq!(position, 6),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_equation("x^") {
            Err(ParseError::Syntax { position, .. }) => assert_eq!(position, 2),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(parse_equation("x +").is_err());
        assert!(parse_equation("x y +* z").is_err());
        assert!(parse_equation("(x + 1").is_err());
        assert!(parse_equation("x = y = z").is_err());
        assert!(parse_equation("").is_err());
    }

    #[test]
    fn digits_after_nonindexable_letters_are_rejected() {
        assert!(parse_equation("y2 + x").is_err());
        assert!(parse_equation("z3").is_err());
        assert!(parse_equation("x2 + y").is_ok());
    }

    #[test]
    fn unused_variables_compress() {
        // x3 never appears: x1, x2, x4 compress to three variables.
        let p = parse_equation("x1^2 + x2 + x4^3").unwrap();
        assert_eq!(p.nvars(), 3);
    }

    #[test]
    fn component_arity_is_enforced() {
        assert!(parse_component("u^2 - 1", 1).is_ok());
        assert_eq!(parse_component("u", 3).unwrap().nvars(), 3);
        assert!(matches!(
            parse_component("v + 1", 1),
            Err(ParseError::VariableOutOfRange { .. })
        ));
        assert!(parse_component("x + 1", 1).is_err());
    }

    #[test]
    fn tuples() {
        let t = parse_tuple("9, 10, -12").unwrap();
        assert_eq!(t, vec![BigInt::from(9), BigInt::from(10), BigInt::from(-12)]);
        let t = parse_tuple("1 1 1").unwrap();
        assert_eq!(t.len(), 3);
        assert!(parse_tuple("1, a").is_err());
    }

    #[test]
    fn huge_coefficients_survive() {
        let p = parse_equation("26598666324717134136290869x - y").unwrap();
        assert_eq!(
            p.size_h(),
            "26598666324717134136290869".parse::<num_bigint::BigInt>().unwrap() * 2 + 2
        );
    }
}
