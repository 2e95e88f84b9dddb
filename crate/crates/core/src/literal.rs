//! Text literals for points, words, polynomials and Möbius maps.
//!
//! ```text
//! point  := RAT | RAT i | RAT (+|-) [RAT] i | [-] i
//! RAT    := [-] INT [ / INT ]
//! word   := "[" [point ("," point)*] "]"
//! poly   := "0" | [-] term ((+|-) term)*
//! term   := RAT | [RAT] ("x(" point ")")+
//! mobius := ["("] point "," point "," point "," point [")"]
//! ```
//!
//! Columns in errors are 1-based character positions.

use rug::{Integer, Rational};

use crate::algebra::{Letter, Point, Word, WordPoly};
use crate::error::{Error, Result};
use crate::symmetry::MobiusMap;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn column(&self) -> usize {
        self.src[..self.pos].chars().count() + 1
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::parse(self.column(), msg))
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.err(format!("expected '{c}', found '{found}'")),
                None => self.err(format!("expected '{c}', found end of input")),
            }
        }
    }

    fn at_end(&self) -> bool {
        self.pos == self.src.len()
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(c) => self.err(format!("unexpected trailing '{c}'")),
        }
    }

    fn digits(&mut self) -> Result<Integer> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return self.err("expected a digit");
        }
        Ok(self.src[start..self.pos].parse().expect("ascii digits"))
    }

    /// `INT [/ INT]` without sign.
    fn unsigned_rational(&mut self) -> Result<Rational> {
        let num = self.digits()?;
        if self.eat('/') {
            let col = self.column();
            let den = self.digits()?;
            if den == 0 {
                return Err(Error::parse(col, "zero denominator"));
            }
            Ok(Rational::from((num, den)))
        } else {
            Ok(Rational::from(num))
        }
    }

    fn sign(&mut self) -> Option<i32> {
        if self.eat('-') {
            Some(-1)
        } else if self.eat('+') {
            Some(1)
        } else {
            None
        }
    }

    fn point(&mut self) -> Result<Point> {
        self.skip_ws();
        let lead = self.sign().unwrap_or(1);
        self.skip_ws();
        if self.eat('i') {
            return Ok(Point::new(Rational::new(), Rational::from(lead)));
        }
        let first = Rational::from(lead) * self.unsigned_rational()?;
        if self.eat('i') {
            return Ok(Point::new(Rational::new(), first));
        }
        let save = self.pos;
        self.skip_ws();
        let Some(s) = self.sign() else {
            self.pos = save;
            return Ok(Point::real(first));
        };
        self.skip_ws();
        let im = if self.peek() == Some('i') {
            Rational::from(1)
        } else {
            self.unsigned_rational()?
        };
        self.expect('i')?;
        Ok(Point::new(first, Rational::from(s) * im))
    }

    fn word(&mut self) -> Result<Word> {
        self.skip_ws();
        self.expect('[')?;
        self.skip_ws();
        let mut letters = Vec::new();
        if self.eat(']') {
            return Ok(Word::empty());
        }
        loop {
            letters.push(Letter::new(self.point()?));
            self.skip_ws();
            if self.eat(']') {
                break;
            }
            self.expect(',')?;
        }
        Ok(Word::new(letters))
    }

    fn monomial(&mut self) -> Result<Word> {
        let mut letters = Vec::new();
        while self.peek() == Some('x') {
            self.bump();
            self.expect('(')?;
            letters.push(Letter::new(self.point()?));
            self.skip_ws();
            self.expect(')')?;
        }
        Ok(Word::new(letters))
    }

    fn term(&mut self) -> Result<(Word, Rational)> {
        self.skip_ws();
        if self.peek() == Some('x') {
            return Ok((self.monomial()?, Rational::from(1)));
        }
        let coef = self.unsigned_rational()?;
        let save = self.pos;
        self.skip_ws();
        self.eat('*');
        self.skip_ws();
        if self.peek() == Some('x') {
            Ok((self.monomial()?, coef))
        } else {
            self.pos = save;
            Ok((Word::empty(), coef))
        }
    }

    fn poly(&mut self) -> Result<WordPoly> {
        self.skip_ws();
        let mut out = WordPoly::zero();
        let mut s = self.sign().unwrap_or(1);
        loop {
            let (w, c) = self.term()?;
            out.add_term(w, Rational::from(s) * c);
            self.skip_ws();
            match self.sign() {
                Some(next) => s = next,
                None => break,
            }
        }
        Ok(out)
    }
}

pub fn parse_point(s: &str) -> Result<Point> {
    let mut c = Cursor::new(s);
    let p = c.point()?;
    c.finish()?;
    Ok(p)
}

pub fn parse_word(s: &str) -> Result<Word> {
    let mut c = Cursor::new(s);
    let w = c.word()?;
    c.finish()?;
    Ok(w)
}

/// One or more word literals separated by whitespace, e.g. `"[0] [1]"`.
pub fn parse_words(s: &str) -> Result<Vec<Word>> {
    let mut c = Cursor::new(s);
    let mut out = vec![c.word()?];
    c.skip_ws();
    while !c.at_end() {
        out.push(c.word()?);
        c.skip_ws();
    }
    Ok(out)
}

/// Parses the rendering produced by `WordPoly`'s `Display`.
pub fn parse_poly(s: &str) -> Result<WordPoly> {
    let mut c = Cursor::new(s);
    let p = c.poly()?;
    c.finish()?;
    Ok(p)
}

/// A comma-separated list of points, e.g. `"0, 1, -1"`.
pub fn parse_points(s: &str) -> Result<Vec<Point>> {
    let mut c = Cursor::new(s);
    let mut out = vec![c.point()?];
    c.skip_ws();
    while c.eat(',') {
        out.push(c.point()?);
        c.skip_ws();
    }
    c.finish()?;
    Ok(out)
}

/// `p,q,r,s` for `z ↦ (pz + q)/(rz + s)`.
pub fn parse_mobius(s: &str) -> Result<MobiusMap> {
    let mut c = Cursor::new(s);
    c.skip_ws();
    let paren = c.eat('(');
    let mut e = Vec::with_capacity(4);
    for k in 0..4 {
        if k > 0 {
            c.skip_ws();
            c.expect(',')?;
        }
        e.push(c.point()?);
    }
    if paren {
        c.skip_ws();
        c.expect(')')?;
    }
    c.finish()?;
    let [p, q, r, s]: [Point; 4] = e.try_into().expect("four entries");
    MobiusMap::new(p, q, r, s)
}

/// A comma-separated list of positive integers, e.g. `"2,1,1"`.
pub fn parse_index_list(s: &str) -> Result<Vec<u32>> {
    let mut c = Cursor::new(s);
    let mut out = Vec::new();
    loop {
        c.skip_ws();
        let col = c.column();
        let n = c.digits()?;
        match n.to_u32() {
            Some(v) if v > 0 => out.push(v),
            _ => return Err(Error::parse(col, "expected a positive integer")),
        }
        c.skip_ws();
        if !c.eat(',') {
            break;
        }
    }
    c.finish()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn points() {
        assert_eq!(parse_point("0").unwrap(), Point::zero());
        assert_eq!(parse_point(" -3/6 ").unwrap(), Point::real(q(-1, 2)));
        assert_eq!(parse_point("2i").unwrap(), Point::gaussian(0, 2));
        assert_eq!(parse_point("-i").unwrap(), Point::gaussian(0, -1));
        assert_eq!(parse_point("i").unwrap(), Point::i());
        assert_eq!(parse_point("1-1i").unwrap(), Point::gaussian(1, -1));
        assert_eq!(parse_point("1 + i").unwrap(), Point::gaussian(1, 1));
        assert_eq!(parse_point("1/2-3/4i").unwrap(), Point::new(q(1, 2), q(-3, 4)));
    }

    #[test]
    fn point_errors_carry_columns() {
        assert_eq!(parse_point("1/0"), Err(Error::parse(3, "zero denominator")));
        assert!(matches!(parse_point("1+2"), Err(Error::Parse { column: 4, .. })));
        assert!(matches!(parse_point("abc"), Err(Error::Parse { column: 1, .. })));
        assert!(matches!(parse_point("1 2"), Err(Error::Parse { column: 3, .. })));
        assert!(parse_point("").is_err());
    }

    #[test]
    fn words() {
        let w = parse_word("[ -1, 0 ]").unwrap();
        assert_eq!(w, Word::from_points([Point::from_int(-1), Point::zero()]));
        assert_eq!(parse_word("[]").unwrap(), Word::empty());
        assert_eq!(parse_words("[0] [1]").unwrap().len(), 2);
        assert!(matches!(parse_word("[0,,1]"), Err(Error::Parse { column: 4, .. })));
        assert!(matches!(parse_word("[0"), Err(Error::Parse { column: 3, .. })));
    }

    #[test]
    fn polys_round_trip() {
        for s in ["0", "1", "-x(0)x(-1)", "2 x(0)x(0)", "1/2 - x(0)x(1) + 2 x(1)x(0)", "x(1-1i)x(i)"] {
            let p = parse_poly(s).unwrap();
            assert_eq!(parse_poly(&p.to_string()).unwrap(), p, "{s}");
        }
        assert_eq!(parse_poly("x(0) - x(0)").unwrap(), WordPoly::zero());
        assert_eq!(parse_poly("3*x(1)").unwrap().to_string(), "3 x(1)");
        assert!(parse_poly("x(0) +").is_err());
        assert!(parse_poly("x 0").is_err());
    }

    #[test]
    fn mobius() {
        assert_eq!(parse_mobius("-1,1,1,1").unwrap(), MobiusMap::cayley());
        assert_eq!(parse_mobius(&MobiusMap::cayley().to_string()).unwrap(), MobiusMap::cayley());
        assert_eq!(parse_mobius("1,1,1,1"), Err(Error::DegenerateMap));
        assert!(parse_mobius("1,0,0").is_err());
    }

    #[test]
    fn index_lists() {
        assert_eq!(parse_index_list("2,1, 1").unwrap(), vec![2, 1, 1]);
        assert!(parse_index_list("2,0").is_err());
        assert!(parse_index_list("").is_err());
    }
}
