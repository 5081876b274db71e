//! Recursive-descent parser for the polynomial text grammar.
//!
//! ```text
//! poly   := mono ('+' mono)* | '0'
//! mono   := factor ('*' factor)* | '1'
//! factor := var | '(' var ('+' var)* ')'
//! var    := 'r' digits | 's' digits | 'x' digits | '#' bits
//! ```
//!
//! `r` variables are characters, `s` and `x` variables cocharacters; `x_k`
//! is the vector whose coordinates are the binary digits of `k`, least
//! significant first. A parenthesized sum is a single degree-one factor.

use std::fmt;

use twotorus_core::{BitVec, Monomial, Polynomial, Side};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    /// Tokens that would have been accepted at `offset`; empty for semantic
    /// errors.
    pub expected: Vec<&'static str>,
    pub message: String,
}

impl ParseError {
    fn expected(offset: usize, expected: &[&'static str], found: Option<char>) -> Self {
        let found = match found {
            Some(c) => format!("{c:?}"),
            None => "end of input".to_string(),
        };
        Self { offset, expected: expected.to_vec(), message: format!("unexpected {found}") }
    }

    fn at(offset: usize, message: impl Into<String>) -> Self {
        Self { offset, expected: Vec::new(), message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "byte {}: {}", self.offset, self.message)?;
        if !self.expected.is_empty() {
            write!(f, ", expected one of: {}", self.expected.join(" "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    R,
    S,
    X,
    Bits,
}

#[derive(Clone, Copy, Debug)]
struct Var {
    kind: Kind,
    // 1-based index for r/s/x, raw encoding for bit strings
    value: u32,
    // bit-string length
    width: usize,
    offset: usize,
}

type RawFactor = (Vec<Var>, usize);
type RawMonomial = Vec<RawFactor>;

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

const VAR_START: &[&str] = &["r<digits>", "s<digits>", "x<digits>", "#<bits>"];
const FACTOR_START: &[&str] = &["r<digits>", "s<digits>", "x<digits>", "#<bits>", "("];

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while matches!(self.peek_raw(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn var(&mut self) -> Result<Var, ParseError> {
        let offset = {
            self.skip_ws();
            self.pos
        };
        let kind = match self.peek_raw() {
            Some('r') => Kind::R,
            Some('s') => Kind::S,
            Some('x') => Kind::X,
            Some('#') => Kind::Bits,
            other => return Err(ParseError::expected(offset, VAR_START, other)),
        };
        self.pos += 1;
        if kind == Kind::Bits {
            let start = self.pos;
            while matches!(self.peek_raw(), Some('0' | '1')) {
                self.pos += 1;
            }
            let bits = &self.src[start..self.pos];
            if bits.is_empty() {
                return Err(ParseError::expected(self.pos, &["0", "1"], self.peek_raw()));
            }
            if bits.len() > twotorus_core::gf2::MAX_DIM {
                return Err(ParseError::at(offset, "bit string is too long"));
            }
            let value = bits.bytes().enumerate().fold(0u32, |a, (i, b)| a | ((b - b'0') as u32) << i);
            return Ok(Var { kind, value, width: bits.len(), offset });
        }
        let digits = self.digits();
        if digits.is_empty() {
            return Err(ParseError::expected(self.pos, &["<digits>"], self.peek_raw()));
        }
        let value: u32 = digits.parse().map_err(|_| ParseError::at(offset, "index is too large"))?;
        if value == 0 {
            return Err(ParseError::at(offset, "indices start at 1"));
        }
        Ok(Var { kind, value, width: 0, offset })
    }

    fn factor(&mut self) -> Result<RawFactor, ParseError> {
        self.skip_ws();
        let offset = self.pos;
        if self.eat('(') {
            let mut vars = vec![self.var()?];
            loop {
                if self.eat('+') {
                    vars.push(self.var()?);
                } else if self.eat(')') {
                    return Ok((vars, offset));
                } else {
                    let found = self.peek();
                    return Err(ParseError::expected(self.pos, &["+", ")"], found));
                }
            }
        }
        match self.peek() {
            Some('r' | 's' | 'x' | '#') => Ok((vec![self.var()?], offset)),
            other => Err(ParseError::expected(self.pos, FACTOR_START, other)),
        }
    }

    fn monomial(&mut self) -> Result<RawMonomial, ParseError> {
        if self.peek() == Some('1') {
            self.pos += 1;
            return Ok(Vec::new());
        }
        let mut factors = vec![self.factor()?];
        while self.eat('*') {
            factors.push(self.factor()?);
        }
        Ok(factors)
    }

    fn polynomial(&mut self) -> Result<Vec<RawMonomial>, ParseError> {
        if self.peek() == Some('0') {
            self.pos += 1;
            self.end(&[])?;
            return Ok(Vec::new());
        }
        let mut monos = vec![self.monomial()?];
        while self.eat('+') {
            monos.push(self.monomial()?);
        }
        self.end(&["+", "*"])?;
        Ok(monos)
    }

    fn end(&mut self, more: &[&'static str]) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => {
                let mut expected = more.to_vec();
                expected.push("end of input");
                Err(ParseError::expected(self.pos, &expected, Some(c)))
            }
        }
    }
}

/// Parse a polynomial.
///
/// `n` fixes the dimension; when `None` it is inferred from the largest
/// `r`/`s` index or the bit-string width (`x` variables need an explicit
/// dimension). The side comes from the variable kinds; `default_side` is
/// used when only bit strings (or no variables) appear.
pub fn parse_polynomial(text: &str, n: Option<usize>, default_side: Side) -> Result<Polynomial, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let raw = p.polynomial()?;
    let vars: Vec<Var> = raw.iter().flatten().flat_map(|(vs, _)| vs.iter().copied()).collect();

    let mut side = None;
    for v in &vars {
        let s = match v.kind {
            Kind::R => Side::Character,
            Kind::S | Kind::X => Side::Cocharacter,
            Kind::Bits => continue,
        };
        match side {
            None => side = Some(s),
            Some(prev) if prev != s => return Err(ParseError::at(v.offset, "character and cocharacter variables are mixed")),
            _ => {}
        }
    }
    let side = side.unwrap_or(default_side);

    let widths: Vec<&Var> = vars.iter().filter(|v| v.kind == Kind::Bits).collect();
    let n = match n {
        Some(n) => n,
        None => {
            if let Some(v) = vars.iter().find(|v| v.kind == Kind::X) {
                return Err(ParseError::at(v.offset, "x variables need an explicit dimension"));
            }
            let from_bits = widths.first().map(|v| v.width);
            let from_index = vars.iter().filter(|v| v.kind != Kind::Bits).map(|v| v.value as usize).max();
            match (from_bits, from_index) {
                (Some(w), _) => w,
                (None, Some(i)) => i,
                (None, None) => return Err(ParseError::at(0, "cannot infer the dimension")),
            }
        }
    };
    if n == 0 || n > twotorus_core::gf2::MAX_DIM {
        return Err(ParseError::at(0, format!("dimension {n} is out of range")));
    }
    let resolve = |v: &Var| -> Result<u16, ParseError> {
        match v.kind {
            Kind::Bits => {
                if v.width != n {
                    return Err(ParseError::at(v.offset, format!("bit string has {} bits, expected {n}", v.width)));
                }
                Ok(v.value as u16)
            }
            Kind::R | Kind::S => {
                if v.value as usize > n {
                    return Err(ParseError::at(v.offset, format!("index {} exceeds dimension {n}", v.value)));
                }
                Ok(1 << (v.value - 1))
            }
            Kind::X => {
                if v.value >= 1 << n {
                    return Err(ParseError::at(v.offset, format!("x{} is outside the legend for dimension {n}", v.value)));
                }
                Ok(v.value as u16)
            }
        }
    };
    let mut out = Polynomial::zero(side, n).map_err(|e| ParseError::at(0, e.to_string()))?;
    for mono in &raw {
        let mut factors = Vec::with_capacity(mono.len());
        for (vs, offset) in mono {
            let mut sum = 0u16;
            for v in vs {
                sum ^= resolve(v)?;
            }
            if sum == 0 {
                return Err(ParseError::at(*offset, "factor sums to zero"));
            }
            factors.push(sum);
        }
        let m = Monomial::new(factors).map_err(|e| ParseError::at(0, e.to_string()))?;
        out.add_monomial(m).map_err(|e| ParseError::at(0, e.to_string()))?;
    }
    Ok(out)
}

/// The bit-string text form of `v` in dimension `n`.
pub fn bitstring(v: u16, n: usize) -> String {
    BitVec::new(v, n).map(|b| b.to_string()).unwrap_or_default()
}
