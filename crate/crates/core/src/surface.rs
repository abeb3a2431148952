//! Textual syntax for signatures, objects and arrow terms.
//!
//! Objects: `T | NAME | obj * obj | obj -> obj | ( obj )`, with `*` binding
//! tighter than `->`, `*` left-associative and `->` right-associative.
//!
//! Arrows: `id[obj] | k[obj] | p1[obj,obj] | p2[obj,obj] | eps[obj,obj]
//! | curry[obj,obj](term) | <term, term> | NAME | term . term | ( term )`.
//! `g . f` is `g` after `f`; `.` associates to the right.
//!
//! Signature files hold one declaration per line; `#` starts a comment:
//!
//! ```text
//! object D
//! arrow f : A |- D
//! indeterminate x : T |- D
//! ```

use std::fmt;

use crate::error::{Error, Result};
use crate::syntax::{type_of, Arrow, ArrowType, Object, Side, Signature};

const RESERVED: &[&str] = &["T", "id", "k", "p1", "p2", "eps", "curry"];

#[derive(Clone, Copy, PartialEq, Eq)]
enum Prec {
    Top,
    ProdLeft,
    ProdRight,
    ExpLeft,
}

fn write_object(f: &mut fmt::Formatter<'_>, obj: &Object, prec: Prec) -> fmt::Result {
    match obj {
        Object::Terminal => f.write_str("T"),
        Object::Atom(a) => f.write_str(a),
        Object::Prod(l, r) => {
            let parens = prec == Prec::ProdRight;
            if parens {
                f.write_str("(")?;
            }
            write_object(f, l, Prec::ProdLeft)?;
            f.write_str(" * ")?;
            write_object(f, r, Prec::ProdRight)?;
            if parens {
                f.write_str(")")?;
            }
            Ok(())
        }
        Object::Exp(d, c) => {
            let parens = prec != Prec::Top;
            if parens {
                f.write_str("(")?;
            }
            write_object(f, d, Prec::ExpLeft)?;
            f.write_str(" -> ")?;
            write_object(f, c, Prec::Top)?;
            if parens {
                f.write_str(")")?;
            }
            Ok(())
        }
    }
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_object(f, self, Prec::Top)
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arrow::Const(n) | Arrow::Indet(n) => f.write_str(n),
            Arrow::Id(a) => write!(f, "id[{a}]"),
            Arrow::Bang(a) => write!(f, "k[{a}]"),
            Arrow::Proj(Side::First, a, b) => write!(f, "p1[{a}, {b}]"),
            Arrow::Proj(Side::Second, a, b) => write!(f, "p2[{a}, {b}]"),
            Arrow::Eval(a, b) => write!(f, "eps[{a}, {b}]"),
            Arrow::Comp(after, before) => {
                if matches!(**after, Arrow::Comp(..)) {
                    write!(f, "({after}) . {before}")
                } else {
                    write!(f, "{after} . {before}")
                }
            }
            Arrow::Pair(a, b) => write!(f, "<{a}, {b}>"),
            Arrow::Curry(a, c, body) => write!(f, "curry[{a}, {c}]({body})"),
        }
    }
}

/// Renders a term in the concrete syntax accepted by [`parse_arrow`].
pub fn print_arrow(term: &Arrow) -> String {
    term.to_string()
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LBrack,
    RBrack,
    LParen,
    RParen,
    Lt,
    Gt,
    Comma,
    Dot,
    Star,
    To,
    Colon,
    Turnstile,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::Ident(s) => return write!(f, "`{s}`"),
            Tok::LBrack => "`[`",
            Tok::RBrack => "`]`",
            Tok::LParen => "`(`",
            Tok::RParen => "`)`",
            Tok::Lt => "`<`",
            Tok::Gt => "`>`",
            Tok::Comma => "`,`",
            Tok::Dot => "`.`",
            Tok::Star => "`*`",
            Tok::To => "`->`",
            Tok::Colon => "`:`",
            Tok::Turnstile => "`|-`",
            Tok::Eof => "end of input",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    col: usize,
}

fn lex(text: &str, first_line: usize) -> Result<Vec<(Tok, Pos)>> {
    let mut out = Vec::new();
    let mut line = first_line;
    let mut col = 1;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut ident = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' || c == '\'' {
                    ident.push(c);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            out.push((Tok::Ident(ident), pos));
            continue;
        }
        chars.next();
        col += 1;
        let tok = match c {
            '[' => Tok::LBrack,
            ']' => Tok::RBrack,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '<' => Tok::Lt,
            '>' => Tok::Gt,
            ',' => Tok::Comma,
            '.' => Tok::Dot,
            '*' => Tok::Star,
            ':' => Tok::Colon,
            '-' if chars.peek() == Some(&'>') => {
                chars.next();
                col += 1;
                Tok::To
            }
            '|' if chars.peek() == Some(&'-') => {
                chars.next();
                col += 1;
                Tok::Turnstile
            }
            other => {
                return Err(Error::Parse {
                    line: pos.line,
                    col: pos.col,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((tok, pos));
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    sig: &'a Signature,
}

impl<'a> Parser<'a> {
    fn new(text: &str, first_line: usize, sig: &'a Signature) -> Result<Self> {
        Ok(Parser {
            toks: lex(text, first_line)?,
            at: 0,
            sig,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        let p = self.pos();
        Err(Error::Parse {
            line: p.line,
            col: p.col,
            msg: msg.into(),
        })
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected {tok}, found {}", self.peek()))
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            other => self.error(format!("expected a name, found {other}")),
        }
    }

    fn finish(&mut self) -> Result<()> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            self.error(format!("unexpected {}", self.peek()))
        }
    }

    fn object(&mut self) -> Result<Object> {
        let left = self.product()?;
        if *self.peek() == Tok::To {
            self.bump();
            let right = self.object()?;
            Ok(Object::exp(left, right))
        } else {
            Ok(left)
        }
    }

    fn product(&mut self) -> Result<Object> {
        let mut acc = self.object_atom()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let right = self.object_atom()?;
            acc = Object::prod(acc, right);
        }
        Ok(acc)
    }

    fn object_atom(&mut self) -> Result<Object> {
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let o = self.object()?;
                self.expect(Tok::RParen)?;
                Ok(o)
            }
            Tok::Ident(name) if name == "T" => {
                self.bump();
                Ok(Object::Terminal)
            }
            Tok::Ident(name) => {
                if !self.sig.has_atom(&name) {
                    return Err(Error::UnknownIdentifier(name));
                }
                self.bump();
                Ok(Object::Atom(name.into()))
            }
            other => self.error(format!("expected an object, found {other}")),
        }
    }

    fn indices<const N: usize>(&mut self) -> Result<[Object; N]> {
        self.expect(Tok::LBrack)?;
        let mut objs = Vec::with_capacity(N);
        for i in 0..N {
            if i > 0 {
                self.expect(Tok::Comma)?;
            }
            objs.push(self.object()?);
        }
        self.expect(Tok::RBrack)?;
        Ok(objs.try_into().expect("exactly N indices"))
    }

    fn term(&mut self) -> Result<Arrow> {
        let first = self.term_atom()?;
        if *self.peek() == Tok::Dot {
            self.bump();
            let rest = self.term()?;
            Ok(Arrow::comp(first, rest))
        } else {
            Ok(first)
        }
    }

    fn term_atom(&mut self) -> Result<Arrow> {
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let t = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            Tok::Lt => {
                self.bump();
                let a = self.term()?;
                self.expect(Tok::Comma)?;
                let b = self.term()?;
                self.expect(Tok::Gt)?;
                Ok(Arrow::pair(a, b))
            }
            Tok::Ident(word) => {
                self.bump();
                match word.as_str() {
                    "id" => {
                        let [a] = self.indices()?;
                        Ok(Arrow::Id(a))
                    }
                    "k" => {
                        let [a] = self.indices()?;
                        Ok(Arrow::Bang(a))
                    }
                    "p1" => {
                        let [a, b] = self.indices()?;
                        Ok(Arrow::p1(a, b))
                    }
                    "p2" => {
                        let [a, b] = self.indices()?;
                        Ok(Arrow::p2(a, b))
                    }
                    "eps" => {
                        let [a, b] = self.indices()?;
                        Ok(Arrow::Eval(a, b))
                    }
                    "curry" => {
                        let [a, c] = self.indices()?;
                        self.expect(Tok::LParen)?;
                        let body = self.term()?;
                        self.expect(Tok::RParen)?;
                        Ok(Arrow::curry(a, c, body))
                    }
                    name => {
                        if self.sig.const_type(name).is_some() {
                            Ok(Arrow::Const(name.into()))
                        } else if self.sig.indeterminate().is_some_and(|x| &*x.name == name) {
                            Ok(Arrow::Indet(name.into()))
                        } else {
                            Err(Error::UnknownIdentifier(name.to_string()))
                        }
                    }
                }
            }
            other => self.error(format!("expected an arrow term, found {other}")),
        }
    }
}

/// Whether a parsed term lives in the base category or in its polynomial
/// extension.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TermClass {
    Plain,
    Poly,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParsedArrow {
    pub term: Arrow,
    pub ty: ArrowType,
    pub class: TermClass,
}

/// Parses and type-checks an arrow term.
pub fn parse_arrow(text: &str, sig: &Signature) -> Result<ParsedArrow> {
    let mut p = Parser::new(text, 1, sig)?;
    let term = p.term()?;
    p.finish()?;
    let ty = type_of(&term, sig)?;
    let class = if term.mentions_indeterminate() {
        TermClass::Poly
    } else {
        TermClass::Plain
    };
    Ok(ParsedArrow { term, ty, class })
}

pub fn parse_object(text: &str, sig: &Signature) -> Result<Object> {
    let mut p = Parser::new(text, 1, sig)?;
    let obj = p.object()?;
    p.finish()?;
    Ok(obj)
}

fn check_name(name: &str, pos: Pos) -> Result<()> {
    if RESERVED.contains(&name) {
        return Err(Error::Parse {
            line: pos.line,
            col: pos.col,
            msg: format!("`{name}` is reserved"),
        });
    }
    Ok(())
}

/// Parses a signature file. Atoms must be declared before they are used.
pub fn parse_signature(text: &str) -> Result<Signature> {
    let mut sig = Signature::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let snapshot = sig.clone();
        let mut p = Parser::new(line, i + 1, &snapshot)?;
        let keyword = p.ident()?;
        let name_pos = p.pos();
        match keyword.as_str() {
            "object" => {
                let name = p.ident()?;
                p.finish()?;
                check_name(&name, name_pos)?;
                sig.add_atom(&name)?;
            }
            "arrow" | "indeterminate" => {
                let name = p.ident()?;
                check_name(&name, name_pos)?;
                p.expect(Tok::Colon)?;
                let source = p.object()?;
                p.expect(Tok::Turnstile)?;
                let target = p.object()?;
                p.finish()?;
                let ty = ArrowType::new(source, target);
                if keyword == "arrow" {
                    sig.add_const(&name, ty)?;
                } else {
                    sig.set_indeterminate(&name, ty)?;
                }
            }
            other => {
                return Err(Error::Parse {
                    line: i + 1,
                    col: 1,
                    msg: format!("unknown declaration `{other}`"),
                })
            }
        }
    }
    Ok(sig)
}
