//! Text syntax for letters, words and σ-expressions.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' INT]
//! atom   := INT ['/' INT] | 's' INT '(' arg ')' | '(' poly ')'
//! arg    := ['+'|'-'] aterm (('+'|'-') aterm)*
//! aterm  := [INT ['/' INT] '*'] afactor+
//! afactor:= (LETTER | '(' arg ')') ['^' INT]
//! LETTER := 'x' INT ["'"] | 'x' ["'"] | 'y' ["'"] | 'z' ["'"] | 'A' [INT] ["'"]
//! ```
//!
//! Juxtaposed letters multiply; `'` marks a transpose. One alphabet per
//! input: indexed `x1 x2'`, quiver `x y z'`, or symbolic `A1 A2` / `A`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::expr::{ArgExpr, SigmaExpr};
use crate::word::{Letter, Word};

/// How letter indices are spelled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alphabet {
    /// `x1, x2, ...`
    Indexed,
    /// `x, y, z` for indices 1, 2, 3 (the mixed quiver's arrows).
    Quiver,
    /// `A1, A2, ...`
    Symbol,
    /// `A` for index 1.
    SingleSymbol,
}

pub const GRAMMAR_HELP: &str = "\
expression grammar:
  poly   := ['+'|'-'] term (('+'|'-') term)*
  term   := factor ('*' factor)*
  factor := atom ['^' INT]
  atom   := INT ['/' INT] | 's' INT '(' arg ')' | '(' poly ')'
  arg    := ['+'|'-'] aterm (('+'|'-') aterm)*
  aterm  := [INT ['/' INT] '*'] afactor+        (juxtaposition multiplies)
  afactor:= (LETTER | '(' arg ')') ['^' INT]
  LETTER := x1 x2 ... | x y z (quiver) | A1 A2 ... | A, with ' for transpose
examples: \"s2(x1)+s1(x1)*s1(x2)\", \"s1(x1 x2')\", \"-1*s1(y z)+s1(y z')\", \"s3(2*x1)\"";

pub(crate) fn write_letter(f: &mut fmt::Formatter<'_>, l: Letter, alphabet: Alphabet) -> fmt::Result {
    let k = l.index();
    match alphabet {
        Alphabet::Quiver if k <= 3 => f.write_str(["x", "y", "z"][(k - 1) as usize])?,
        Alphabet::SingleSymbol if k == 1 => f.write_str("A")?,
        Alphabet::Symbol => write!(f, "A{k}")?,
        _ => write!(f, "x{k}")?,
    }
    if l.is_transposed() {
        f.write_str("'")?;
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Sigma(usize),
    Letter { name: char, index: Option<u32>, transposed: bool },
    Sym(char),
}

struct Lexer;

impl Lexer {
    fn run(src: &str) -> Result<Vec<(usize, Tok)>> {
        let b = src.as_bytes();
        let mut i = 0;
        let mut out = Vec::new();
        let digits = |i: &mut usize| {
            let s = *i;
            while *i < b.len() && b[*i].is_ascii_digit() {
                *i += 1;
            }
            &src[s..*i]
        };
        while i < b.len() {
            let c = b[i] as char;
            let start = i;
            if c.is_ascii_whitespace() {
                i += 1;
                continue;
            }
            if c.is_ascii_digit() {
                let d = digits(&mut i);
                out.push((start, Tok::Int(d.parse().unwrap())));
                continue;
            }
            match c {
                's' => {
                    i += 1;
                    let d = digits(&mut i);
                    if d.is_empty() {
                        return Err(perr(start, "expected an integer after `s`"));
                    }
                    let t: usize = d.parse().map_err(|_| perr(start, "σ index too large"))?;
                    out.push((start, Tok::Sigma(t)));
                }
                'x' | 'y' | 'z' | 'A' => {
                    i += 1;
                    let d = digits(&mut i);
                    let index = if d.is_empty() {
                        None
                    } else {
                        Some(d.parse::<u32>().map_err(|_| perr(start, "letter index too large"))?)
                    };
                    let transposed = i < b.len() && b[i] == b'\'';
                    if transposed {
                        i += 1;
                    }
                    out.push((start, Tok::Letter { name: c, index, transposed }));
                }
                '+' | '-' | '*' | '/' | '^' | '(' | ')' | ',' => {
                    i += 1;
                    out.push((start, Tok::Sym(c)));
                }
                _ => return Err(perr(start, &format!("unexpected character `{c}`"))),
            }
        }
        Ok(out)
    }
}

fn perr(pos: usize, msg: &str) -> Error {
    Error::Parse { pos, msg: msg.to_string() }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    alphabet: Option<Alphabet>,
}

impl Parser {
    fn new(src: &str) -> Result<Self> {
        Ok(Parser { toks: Lexer::run(src)?, pos: 0, end: src.len(), alphabet: None })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(perr(self.here(), &format!("expected `{c}`")))
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = v.clone();
                self.pos += 1;
                Ok(v)
            }
            _ => Err(perr(self.here(), "expected an integer")),
        }
    }

    fn small_int(&mut self) -> Result<u32> {
        let at = self.here();
        let v = self.int()?;
        u32::try_from(v).map_err(|_| perr(at, "exponent too large"))
    }

    fn exponent(&mut self) -> Result<Option<u32>> {
        if self.eat('^') {
            let at = self.here();
            let k = self.small_int()?;
            if k == 0 {
                return Err(perr(at, "exponent must be positive"));
            }
            Ok(Some(k))
        } else {
            Ok(None)
        }
    }

    /// `INT ['/' INT]` with the integer already peeked.
    fn rational(&mut self) -> Result<BigRational> {
        let n = self.int()?;
        if self.eat('/') {
            let at = self.here();
            let d = self.int()?;
            if d == BigInt::from(0) {
                return Err(perr(at, "zero denominator"));
            }
            Ok(BigRational::new(n, d))
        } else {
            Ok(BigRational::from_integer(n))
        }
    }

    fn finish(&self) -> Result<()> {
        if self.pos < self.toks.len() {
            Err(perr(self.here(), "unexpected trailing input"))
        } else {
            Ok(())
        }
    }

    fn letter(&mut self, at: usize, name: char, index: Option<u32>, transposed: bool) -> Result<Letter> {
        let (alpha, k) = match (name, index) {
            ('x', Some(k)) => (Alphabet::Indexed, k),
            ('x', None) => (Alphabet::Quiver, 1),
            ('y', None) => (Alphabet::Quiver, 2),
            ('z', None) => (Alphabet::Quiver, 3),
            ('A', Some(k)) => (Alphabet::Symbol, k),
            ('A', None) => (Alphabet::SingleSymbol, 1),
            _ => return Err(perr(at, &format!("letter `{name}` takes no index"))),
        };
        if k == 0 {
            return Err(perr(at, "letter indices start at 1"));
        }
        match self.alphabet {
            None => self.alphabet = Some(alpha),
            Some(a) if a == alpha => {}
            Some(a) => return Err(perr(at, &format!("mixed alphabets: {a:?} and {alpha:?}"))),
        }
        Ok(Letter::new(k, transposed))
    }

    fn poly(&mut self) -> Result<SigmaExpr> {
        let mut terms = Vec::new();
        let mut neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let t = self.term()?;
            terms.push(if neg { negate(t) } else { t });
            if self.eat('+') {
                neg = false;
            } else if self.eat('-') {
                neg = true;
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { SigmaExpr::Sum(terms) })
    }

    fn term(&mut self) -> Result<SigmaExpr> {
        let mut fs = vec![self.factor()?];
        while self.eat('*') {
            fs.push(self.factor()?);
        }
        Ok(if fs.len() == 1 { fs.pop().unwrap() } else { SigmaExpr::Product(fs) })
    }

    fn factor(&mut self) -> Result<SigmaExpr> {
        let a = self.atom()?;
        Ok(match self.exponent()? {
            Some(k) => SigmaExpr::Power(Box::new(a), k),
            None => a,
        })
    }

    fn atom(&mut self) -> Result<SigmaExpr> {
        let at = self.here();
        match self.peek().cloned() {
            Some(Tok::Int(_)) => Ok(SigmaExpr::Const(self.rational()?)),
            Some(Tok::Sigma(t)) => {
                self.pos += 1;
                if t == 0 {
                    return Err(perr(at, "σ_t requires t >= 1"));
                }
                self.expect('(')?;
                let arg = self.arg()?;
                self.expect(')')?;
                Ok(SigmaExpr::Sigma { t, arg })
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.poly()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Letter { .. }) => Err(perr(at, "letters must appear inside s<t>(...)")),
            _ => Err(perr(at, "expected a number, s<t>(...) or `(`")),
        }
    }

    fn arg(&mut self) -> Result<ArgExpr> {
        let mut terms = Vec::new();
        let mut neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let t = self.aterm()?;
            terms.push(if neg { ArgExpr::Scale(BigRational::from_integer((-1).into()), Box::new(t)) } else { t });
            if self.eat('+') {
                neg = false;
            } else if self.eat('-') {
                neg = true;
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { ArgExpr::Sum(terms) })
    }

    fn aterm(&mut self) -> Result<ArgExpr> {
        let coeff = if matches!(self.peek(), Some(Tok::Int(_))) {
            let c = self.rational()?;
            self.expect('*')?;
            Some(c)
        } else {
            None
        };
        let mut fs = vec![self.afactor()?];
        while matches!(self.peek(), Some(Tok::Letter { .. }) | Some(Tok::Sym('('))) {
            fs.push(self.afactor()?);
        }
        let prod = collapse_product(fs);
        Ok(match coeff {
            Some(c) => ArgExpr::Scale(c, Box::new(prod)),
            None => prod,
        })
    }

    fn afactor(&mut self) -> Result<ArgExpr> {
        let at = self.here();
        let a = match self.peek().cloned() {
            Some(Tok::Letter { name, index, transposed }) => {
                self.pos += 1;
                ArgExpr::Word(Word::letter(self.letter(at, name, index, transposed)?))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let a = self.arg()?;
                self.expect(')')?;
                a
            }
            _ => return Err(perr(at, "expected a letter or `(`")),
        };
        Ok(match self.exponent()? {
            Some(k) => ArgExpr::Power(Box::new(a), k),
            None => a,
        })
    }
}

/// Merges runs of adjacent plain letters into a single word.
fn collapse_product(fs: Vec<ArgExpr>) -> ArgExpr {
    let mut out: Vec<ArgExpr> = Vec::new();
    for f in fs {
        match (out.last_mut(), f) {
            (Some(ArgExpr::Word(prev)), ArgExpr::Word(w)) => *prev = prev.concat(&w),
            (_, f) => out.push(f),
        }
    }
    if out.len() == 1 {
        out.pop().unwrap()
    } else {
        ArgExpr::Product(out)
    }
}

fn negate(e: SigmaExpr) -> SigmaExpr {
    match e {
        SigmaExpr::Const(c) => SigmaExpr::Const(-c),
        SigmaExpr::Product(mut v) => {
            if let Some(SigmaExpr::Const(c)) = v.first_mut() {
                *c = -c.clone();
                SigmaExpr::Product(v)
            } else {
                v.insert(0, SigmaExpr::int(-1));
                SigmaExpr::Product(v)
            }
        }
        e => SigmaExpr::Product(vec![SigmaExpr::int(-1), e]),
    }
}

/// Parses a σ-expression; also reports which alphabet its letters used
/// (`Indexed` when there are none).
pub fn parse_expr(src: &str) -> Result<(SigmaExpr, Alphabet)> {
    let mut p = Parser::new(src)?;
    if p.toks.is_empty() {
        return Err(perr(0, "empty expression"));
    }
    let e = p.poly()?;
    p.finish()?;
    Ok((e, p.alphabet.unwrap_or(Alphabet::Indexed)))
}

/// Parses a single `σ` argument such as `x1 + 2*x2 x1'`.
pub fn parse_arg(src: &str) -> Result<(ArgExpr, Alphabet)> {
    let mut p = Parser::new(src)?;
    let a = p.arg()?;
    p.finish()?;
    Ok((a, p.alphabet.unwrap_or(Alphabet::Indexed)))
}

/// Parses a comma-separated list of arguments sharing one alphabet.
pub fn parse_arg_list(src: &str) -> Result<(Vec<ArgExpr>, Alphabet)> {
    let mut p = Parser::new(src)?;
    let mut out = vec![p.arg()?];
    while p.eat(',') {
        out.push(p.arg()?);
    }
    p.finish()?;
    Ok((out, p.alphabet.unwrap_or(Alphabet::Indexed)))
}

/// Parses a plain word: letters only, whitespace separated or juxtaposed.
pub fn parse_word(src: &str) -> Result<(Word, Alphabet)> {
    let mut p = Parser::new(src)?;
    let mut letters = Vec::new();
    while let Some(Tok::Letter { name, index, transposed }) = p.peek().cloned() {
        let at = p.here();
        p.pos += 1;
        letters.push(p.letter(at, name, index, transposed)?);
    }
    if letters.is_empty() {
        return Err(perr(p.here(), "expected a letter"));
    }
    p.finish()?;
    Ok((Word::new(letters), p.alphabet.unwrap()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basic() {
        let (e, a) = parse_expr("s2(x1)+s1(x1)*s1(x2)").unwrap();
        assert_eq!(a, Alphabet::Indexed);
        match e {
            SigmaExpr::Sum(v) => assert_eq!(v.len(), 2),
            other => panic!("{other:?}"),
        }
        let (e, _) = parse_expr("s1(x1 x2')").unwrap();
        let w: Word = "x1 x2'".parse().unwrap();
        assert_eq!(e, SigmaExpr::Sigma { t: 1, arg: ArgExpr::Word(w) });
    }

    #[test]
    fn parse_quiver() {
        let (_, a) = parse_expr("-1*s1(y z)+s1(y z')").unwrap();
        assert_eq!(a, Alphabet::Quiver);
        let (w, _) = parse_word("x y' z").unwrap();
        assert_eq!(w.letters()[1], Letter::new(2, true));
    }

    #[test]
    fn parse_errors() {
        let err = parse_expr("s0(x1)").unwrap_err();
        assert!(err.to_string().contains("t >= 1"), "{err}");
        assert!(matches!(parse_expr("s1(x1 y)"), Err(Error::Parse { pos: 6, .. })));
        assert!(parse_expr("s1(x1").is_err());
        assert!(parse_expr("x1").is_err());
        assert!(parse_expr("s1(x0)").is_err());
        assert!(parse_expr("").is_err());
    }

    #[test]
    fn parse_arg_forms() {
        let (a, _) = parse_arg("2*x1 x2 - (x1+x2)^2").unwrap();
        assert!(matches!(a, ArgExpr::Sum(ref v) if v.len() == 2));
        let (l, _) = parse_arg_list("x1, x2 x1', x1+x2").unwrap();
        assert_eq!(l.len(), 3);
    }
}
