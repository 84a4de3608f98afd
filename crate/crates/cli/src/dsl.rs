//! The program language.
//!
//! ```text
//! program := surface twist* command
//! surface := "surface(" INT ")"
//! twist   := "tw{" INT ("," INT)* ("|" conj)? "}" ("^" INT)?
//! conj    := (("s" INT) ("^-1")?)+
//! command := "product" | "mult" | "relations-check" | "hurwitz(" INT ")"
//!          | "enumerate" | "stretch" | "invariants" | "verify-unique"
//!          | "family(" INT "," INT "," INT "," INT (";" INT ("," INT)*)? ")"
//! ```
//!
//! Whitespace separates tokens freely and `#` starts a comment running to
//! the end of the line.

use std::fmt;

use planar_mcg::factorization::Factorization;
use planar_mcg::{BraidLetter, BraidWord, Curve};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistExpr {
    pub set: Vec<usize>,
    pub conj: Vec<(usize, bool)>,
    pub exponent: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyArgs {
    pub n: usize,
    pub k: usize,
    pub p: usize,
    pub q: usize,
    pub m: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Product,
    Mult,
    RelationsCheck,
    Hurwitz(usize),
    Enumerate,
    Stretch,
    Invariants,
    Family(FamilyArgs),
    VerifyUnique,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Program {
    pub surface_size: usize,
    pub monodromy: Vec<TwistExpr>,
    pub command: Command,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn location(&self, pos: usize) -> (usize, usize) {
        let before = &self.src[..pos.min(self.src.len())];
        let line = 1 + before.iter().filter(|&&b| b == b'\n').count();
        let start = before.iter().rposition(|&b| b == b'\n').map_or(0, |i| i + 1);
        let column = 1 + String::from_utf8_lossy(&before[start..]).chars().count();
        (line, column)
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> ParseError {
        let (line, column) = self.location(pos);
        ParseError { line, column, message: message.into() }
    }

    fn skip_space(&mut self) {
        while self.pos < self.src.len() {
            match self.src[self.pos] {
                b'#' => {
                    while self.pos < self.src.len() && self.src[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                b if b.is_ascii_whitespace() => self.pos += 1,
                _ => break,
            }
        }
    }

    fn peek_is(&self, s: &str) -> bool {
        self.src[self.pos..].starts_with(s.as_bytes())
    }

    fn expect(&mut self, s: &str) -> Result<(), ParseError> {
        if self.peek_is(s) {
            self.pos += s.len();
            Ok(())
        } else {
            Err(self.error_at(self.pos, format!("expected `{s}`, found {}", self.found())))
        }
    }

    fn found(&self) -> String {
        match self.src.get(self.pos) {
            None => "end of input".into(),
            Some(_) => {
                let rest = String::from_utf8_lossy(&self.src[self.pos..]);
                let tok: String = rest.chars().take_while(|c| !c.is_whitespace()).take(12).collect();
                format!("`{tok}`")
            }
        }
    }

    fn int(&mut self) -> Result<(usize, usize), ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error_at(start, format!("expected an integer, found {}", self.found())));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let v = text.parse().map_err(|_| self.error_at(start, format!("integer {text} is too large")))?;
        Ok((v, start))
    }

    /// An integer separated from the previous token by optional spaces.
    fn spaced_int(&mut self) -> Result<(usize, usize), ParseError> {
        self.skip_space();
        self.int()
    }

    fn spaced(&mut self, s: &str) -> Result<(), ParseError> {
        self.skip_space();
        self.expect(s)
    }

    fn twist(&mut self, n: usize) -> Result<TwistExpr, ParseError> {
        self.expect("tw{")?;
        let mut set = Vec::new();
        loop {
            let (v, at) = self.spaced_int()?;
            if v == 0 || v > n {
                return Err(self.error_at(at, format!("hole {v} is outside 1..={n}")));
            }
            if set.contains(&v) {
                return Err(self.error_at(at, format!("hole {v} listed twice")));
            }
            set.push(v);
            self.skip_space();
            if self.peek_is(",") {
                self.pos += 1;
            } else {
                break;
            }
        }
        set.sort_unstable();
        let mut conj = Vec::new();
        if self.peek_is("|") {
            self.pos += 1;
            self.skip_space();
            while self.peek_is("s") {
                self.pos += 1;
                let (i, at) = self.int()?;
                if i == 0 || i >= n {
                    return Err(self.error_at(at, format!("half twist s{i} needs 1 <= i <= {}", n.saturating_sub(1))));
                }
                let inv = self.peek_is("^-1");
                if inv {
                    self.pos += 3;
                }
                conj.push((i, inv));
                self.skip_space();
            }
            if conj.is_empty() {
                return Err(self.error_at(self.pos, format!("expected a half twist `s<i>`, found {}", self.found())));
            }
        }
        self.spaced("}")?;
        let mut exponent = 1;
        if self.peek_is("^") {
            self.pos += 1;
            let (e, at) = self.int()?;
            exponent = u32::try_from(e).map_err(|_| self.error_at(at, "exponent too large"))?;
        }
        Ok(TwistExpr { set, conj, exponent })
    }

    fn int_list(&mut self, close: &str) -> Result<Vec<usize>, ParseError> {
        let mut out = vec![self.spaced_int()?.0];
        loop {
            self.skip_space();
            if self.peek_is(",") {
                self.pos += 1;
                out.push(self.spaced_int()?.0);
            } else if self.peek_is(close) {
                return Ok(out);
            } else {
                return Err(self.error_at(self.pos, format!("expected `,` or `{close}`, found {}", self.found())));
            }
        }
    }

    fn command(&mut self) -> Result<Command, ParseError> {
        let start = self.pos;
        let simple = [
            ("product", Command::Product),
            ("mult", Command::Mult),
            ("relations-check", Command::RelationsCheck),
            ("enumerate", Command::Enumerate),
            ("stretch", Command::Stretch),
            ("invariants", Command::Invariants),
            ("verify-unique", Command::VerifyUnique),
        ];
        let word_end = self.src[self.pos..]
            .iter()
            .position(|b| !(b.is_ascii_alphanumeric() || *b == b'-'))
            .map_or(self.src.len(), |i| self.pos + i);
        let word = std::str::from_utf8(&self.src[self.pos..word_end]).unwrap_or("");
        if let Some((_, c)) = simple.iter().find(|(name, _)| *name == word) {
            self.pos = word_end;
            return Ok(c.clone());
        }
        match word {
            "hurwitz" => {
                self.pos = word_end;
                self.spaced("(")?;
                let (i, _) = self.spaced_int()?;
                self.spaced(")")?;
                Ok(Command::Hurwitz(i))
            }
            "family" => {
                self.pos = word_end;
                self.spaced("(")?;
                let head = self.int_list_until_semicolon()?;
                if head.len() != 4 {
                    return Err(self.error_at(start, format!("family takes n,k,p,q, got {} numbers", head.len())));
                }
                let mut m = Vec::new();
                self.skip_space();
                if self.peek_is(";") {
                    self.pos += 1;
                    m = self
                        .int_list(")")?
                        .into_iter()
                        .map(|v| u32::try_from(v).map_err(|_| self.error_at(start, "exponent too large")))
                        .collect::<Result<_, _>>()?;
                }
                self.spaced(")")?;
                Ok(Command::Family(FamilyArgs { n: head[0], k: head[1], p: head[2], q: head[3], m }))
            }
            _ => Err(self.error_at(start, format!("expected a twist or a command, found {}", self.found()))),
        }
    }

    fn int_list_until_semicolon(&mut self) -> Result<Vec<usize>, ParseError> {
        let mut out = vec![self.spaced_int()?.0];
        loop {
            self.skip_space();
            if self.peek_is(",") {
                self.pos += 1;
                out.push(self.spaced_int()?.0);
            } else if self.peek_is(";") || self.peek_is(")") {
                return Ok(out);
            } else {
                return Err(self.error_at(self.pos, format!("expected `,`, `;` or `)`, found {}", self.found())));
            }
        }
    }
}

pub fn parse(source: &str) -> Result<Program, ParseError> {
    let mut p = Parser { src: source.as_bytes(), pos: 0 };
    p.skip_space();
    p.expect("surface(")?;
    let (n, at) = p.spaced_int()?;
    if n == 0 {
        return Err(p.error_at(at, "surface needs at least one hole"));
    }
    p.spaced(")")?;
    let mut monodromy = Vec::new();
    loop {
        p.skip_space();
        if p.peek_is("tw") {
            monodromy.push(p.twist(n)?);
        } else {
            break;
        }
    }
    let command = p.command()?;
    p.skip_space();
    if p.pos < p.src.len() {
        return Err(p.error_at(p.pos, format!("unexpected trailing input {}", p.found())));
    }
    Ok(Program { surface_size: n, monodromy, command })
}

impl TwistExpr {
    pub fn braid(&self) -> BraidWord {
        BraidWord(self.conj.iter().map(|&(i, inv)| BraidLetter::half(i, inv)).collect())
    }

    pub fn from_curve(c: &Curve) -> TwistExpr {
        let conj = c
            .conjugator()
            .letters()
            .iter()
            .map(|l| match l.gen {
                planar_mcg::BraidGen::Half(i) => (i as usize, l.inverse),
                planar_mcg::BraidGen::Boundary(_) => unreachable!("curve conjugators carry no boundary twists"),
            })
            .collect();
        TwistExpr { set: c.enclosed().to_vec(), conj, exponent: 1 }
    }
}

impl fmt::Display for TwistExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set: Vec<String> = self.set.iter().map(|i| i.to_string()).collect();
        write!(f, "tw{{{}", set.join(","))?;
        if !self.conj.is_empty() {
            f.write_str("|")?;
            for &(i, inv) in &self.conj {
                write!(f, "s{i}{}", if inv { "^-1" } else { "" })?;
            }
        }
        f.write_str("}")?;
        if self.exponent != 1 {
            write!(f, "^{}", self.exponent)?;
        }
        Ok(())
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Product => f.write_str("product"),
            Command::Mult => f.write_str("mult"),
            Command::RelationsCheck => f.write_str("relations-check"),
            Command::Hurwitz(i) => write!(f, "hurwitz({i})"),
            Command::Enumerate => f.write_str("enumerate"),
            Command::Stretch => f.write_str("stretch"),
            Command::Invariants => f.write_str("invariants"),
            Command::VerifyUnique => f.write_str("verify-unique"),
            Command::Family(a) => {
                write!(f, "family({},{},{},{}", a.n, a.k, a.p, a.q)?;
                if !a.m.is_empty() {
                    let m: Vec<String> = a.m.iter().map(|e| e.to_string()).collect();
                    write!(f, ";{}", m.join(","))?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "surface({})", self.surface_size)?;
        for t in &self.monodromy {
            write!(f, " {t}")?;
        }
        writeln!(f, " {}", self.command)
    }
}

/// Canonical source text of `program`.
pub fn print(program: &Program) -> String {
    program.to_string()
}

impl Program {
    /// The monodromy as a factorization, powers expanded.
    pub fn factorization(&self) -> planar_mcg::Result<Factorization> {
        let mut f = Factorization::empty(self.surface_size);
        for t in &self.monodromy {
            let c = Curve::new(self.surface_size, &t.set, &t.braid())?;
            for _ in 0..t.exponent {
                f.push(c.clone())?;
            }
        }
        Ok(f)
    }

    pub fn from_factorization(f: &Factorization, command: Command) -> Program {
        Program { surface_size: f.n(), monodromy: f.curves().iter().map(TwistExpr::from_curve).collect(), command }
    }
}
