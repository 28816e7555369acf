//! Text formats.
//!
//! ```text
//! word            1 | a^2*b^-1*a
//! module element  0 | 2*(e0 @ a*b) - (e1 @ 1)
//! Wh element      0 | (1, (e0 @ a))[a*b] - (0, 0)[b]
//!
//! manifold file   group: Z(a)*Zmod(3)(b)
//!                 module: free(1)            # or: zero
//!                 w1: a=-1 b=+1              # optional, default +1
//!                 w2: e0=1                   # optional, default 0
//!
//! barbell file    circle: delta = a*b, disk = (e0 @ 1)
//! ```
//!
//! `#` starts a comment. A manifold file and a barbell file may be the same
//! file: each parser skips the other's keys.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::barbell::{BarbellDescriptor, Circle};
use crate::error::{Error, Result};
use crate::group::{FactorSpec, GroupPresentation, Order, Word};
use crate::manifold::ManifoldData;
use crate::module::{ModuleElement, ModuleSpec};
use crate::whitehead::{WhElement, WhTerm, Z2};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    col: usize,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int(n) => format!("`{n}`"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::End => "end of input".into(),
    }
}

fn lex(text: &str, line: usize, col0: usize) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), col });
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let n = s.parse::<i64>().map_err(|_| Error::Parse {
                line,
                column: col,
                message: format!("integer `{s}` is too large"),
            })?;
            out.push(Token { tok: Tok::Int(n), col });
        } else if "*^()[],@+-=:;".contains(c) {
            out.push(Token { tok: Tok::Sym(c), col });
            i += 1;
        } else {
            return Err(Error::Parse { line, column: col, message: format!("unexpected character `{c}`") });
        }
    }
    out.push(Token { tok: Tok::End, col: col0 + chars.len() + 1 });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    line: usize,
    group: &'a GroupPresentation,
    module: ModuleSpec,
}

impl<'a> Parser<'a> {
    fn new(text: &str, line: usize, col0: usize, manifold: &'a ManifoldData) -> Result<Self> {
        Ok(Parser {
            toks: lex(text, line, col0)?,
            pos: 0,
            line,
            group: manifold.group(),
            module: manifold.module(),
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn col(&self) -> usize {
        self.toks[self.pos].col
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { line: self.line, column: self.col(), message: message.into() })
    }

    fn unexpected<T>(&self, wanted: &str) -> Result<T> {
        self.err(format!("expected {wanted}, found {}", describe(self.peek())))
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            self.unexpected(&format!("`{c}`"))
        }
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect_end(&self) -> Result<()> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            self.unexpected("end of input")
        }
    }

    fn ident(&mut self, wanted: &str) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            _ => self.unexpected(wanted),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        match self.peek() {
            Tok::Ident(s) if s == kw => {
                self.bump();
                Ok(())
            }
            _ => self.unexpected(&format!("`{kw}`")),
        }
    }

    fn unsigned(&mut self, wanted: &str) -> Result<i64> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            _ => self.unexpected(wanted),
        }
    }

    fn signed(&mut self) -> Result<i64> {
        let neg = if self.eat_sym('-') {
            true
        } else {
            self.eat_sym('+');
            false
        };
        let n = self.unsigned("an integer")?;
        Ok(if neg { -n } else { n })
    }

    fn word(&mut self) -> Result<Word> {
        if *self.peek() == Tok::Int(1) {
            self.bump();
            return Ok(Word::identity());
        }
        let mut raw = Vec::new();
        loop {
            let col = self.col();
            let name = self.ident("a generator name or `1`")?;
            let factor = match self.group.factor_index(&name) {
                Some(f) => f,
                None => {
                    return Err(Error::Parse {
                        line: self.line,
                        column: col,
                        message: format!("unknown generator `{name}`"),
                    })
                }
            };
            let exp = if self.eat_sym('^') {
                let col = self.col();
                let e = self.signed()?;
                if e == 0 {
                    return Err(Error::Parse {
                        line: self.line,
                        column: col,
                        message: "zero exponent".into(),
                    });
                }
                e
            } else {
                1
            };
            raw.push((factor, exp));
            // `*` continues the word only when a generator follows
            if *self.peek() == Tok::Sym('*') && matches!(self.peek_at(1), Tok::Ident(_)) {
                self.bump();
            } else {
                break;
            }
        }
        self.group.word_normalize(&raw)
    }

    fn basis(&mut self) -> Result<usize> {
        let col = self.col();
        let name = self.ident("a basis element `e<i>`")?;
        let index = name
            .strip_prefix('e')
            .filter(|d| !d.is_empty() && d.chars().all(|c| c.is_ascii_digit()))
            .and_then(|d| d.parse::<usize>().ok());
        let bad = |message: String| Err(Error::Parse { line: self.line, column: col, message });
        match index {
            None => bad(format!("`{name}` is not a basis element (expected e0, e1, ...)")),
            Some(j) if j >= self.module.rank() => bad(format!(
                "basis element e{j} out of range for module {}",
                self.module
            )),
            Some(j) => Ok(j),
        }
    }

    fn module_term(&mut self, sign: i64, out: &mut ModuleElement) -> Result<()> {
        let coeff = if let Tok::Int(n) = *self.peek() {
            self.bump();
            self.expect_sym('*')?;
            n
        } else {
            1
        };
        self.expect_sym('(')?;
        let j = self.basis()?;
        self.expect_sym('@')?;
        let g = self.word()?;
        self.expect_sym(')')?;
        out.add_term(sign * coeff, j, g);
        Ok(())
    }

    fn module_element(&mut self) -> Result<ModuleElement> {
        if *self.peek() == Tok::Int(0) && *self.peek_at(1) != Tok::Sym('*') {
            self.bump();
            return Ok(ModuleElement::zero());
        }
        let mut out = ModuleElement::zero();
        let mut sign = if self.eat_sym('-') { -1 } else { 1 };
        loop {
            self.module_term(sign, &mut out)?;
            sign = if self.eat_sym('+') {
                1
            } else if self.eat_sym('-') {
                -1
            } else {
                break;
            };
        }
        Ok(out)
    }

    fn wh_term(&mut self, sign: i64, out: &mut Vec<WhTerm>) -> Result<()> {
        let mult = if let Tok::Int(n) = *self.peek() {
            self.bump();
            self.expect_sym('*')?;
            n
        } else {
            1
        };
        self.expect_sym('(')?;
        let col = self.col();
        let s = self.unsigned("`0` or `1`")?;
        if s > 1 {
            return Err(Error::Parse {
                line: self.line,
                column: col,
                message: format!("Z/2 component must be 0 or 1, got {s}"),
            });
        }
        self.expect_sym(',')?;
        let sigma = self.module_element()?;
        self.expect_sym(')')?;
        self.expect_sym('[')?;
        let gamma = self.word()?;
        self.expect_sym(']')?;
        let n = sign * mult;
        let sigma = crate::module::mod_scale(n, &sigma);
        out.push(WhTerm::new(Z2::new(n * s), sigma, gamma));
        Ok(())
    }

    fn wh_element(&mut self) -> Result<WhElement> {
        if *self.peek() == Tok::Int(0) && *self.peek_at(1) == Tok::End {
            self.bump();
            return Ok(WhElement::zero());
        }
        let mut terms = Vec::new();
        let mut sign = if self.eat_sym('-') { -1 } else { 1 };
        loop {
            self.wh_term(sign, &mut terms)?;
            sign = if self.eat_sym('+') {
                1
            } else if self.eat_sym('-') {
                -1
            } else {
                break;
            };
        }
        Ok(WhElement::from_terms(terms))
    }
}

pub fn parse_word(text: &str, manifold: &ManifoldData) -> Result<Word> {
    let mut p = Parser::new(text, 1, 0, manifold)?;
    let w = p.word()?;
    p.expect_end()?;
    Ok(w)
}

pub fn parse_module_elem(text: &str, manifold: &ManifoldData) -> Result<ModuleElement> {
    let mut p = Parser::new(text, 1, 0, manifold)?;
    let x = p.module_element()?;
    p.expect_end()?;
    Ok(x)
}

pub fn parse_wh(text: &str, manifold: &ManifoldData) -> Result<WhElement> {
    let mut p = Parser::new(text, 1, 0, manifold)?;
    let x = p.wh_element()?;
    p.expect_end()?;
    Ok(x)
}

/// `;`-separated list of words. An empty string is the empty list.
pub fn parse_word_list(text: &str, manifold: &ManifoldData) -> Result<Vec<Word>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut p = Parser::new(text, 1, 0, manifold)?;
    let mut out = vec![p.word()?];
    while p.eat_sym(';') {
        out.push(p.word()?);
    }
    p.expect_end()?;
    Ok(out)
}

/// A non-blank, comment-stripped `key: value` line.
struct Line<'t> {
    number: usize,
    key: &'t str,
    value: &'t str,
    /// 0-based character offset of `value` within the line
    offset: usize,
}

fn lines(text: &str) -> Result<Vec<Line<'_>>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let number = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let Some(colon) = body.find(':') else {
            let column = body.len() - body.trim_start().len() + 1;
            return Err(Error::Parse { line: number, column, message: "expected `key: value`".into() });
        };
        let key = body[..colon].trim();
        let value = &body[colon + 1..];
        out.push(Line { number, key, value, offset: body[..colon + 1].chars().count() });
    }
    Ok(out)
}

const MANIFOLD_KEYS: [&str; 4] = ["group", "module", "w1", "w2"];
const BARBELL_KEYS: [&str; 1] = ["circle"];

fn unknown_key(l: &Line<'_>) -> Error {
    Error::Parse { line: l.number, column: 1, message: format!("unknown key `{}`", l.key) }
}

/// Parser over a single line whose symbols are looked up in `manifold`.
fn line_parser<'m>(l: &Line<'_>, manifold: &'m ManifoldData) -> Result<Parser<'m>> {
    Parser::new(l.value, l.number, l.offset, manifold)
}

fn parse_group_line(l: &Line<'_>) -> Result<GroupPresentation> {
    let empty = ManifoldData::trivial_w(GroupPresentation::trivial(), ModuleSpec::Zero);
    let mut p = line_parser(l, &empty)?;
    if *p.peek() == Tok::Int(1) {
        p.bump();
        p.expect_end()?;
        return Ok(GroupPresentation::trivial());
    }
    let mut factors = Vec::new();
    let mut names = HashSet::new();
    loop {
        let col = p.col();
        let kind = p.ident("`Z` or `Zmod`")?;
        let order = match kind.as_str() {
            "Z" => Order::Infinite,
            "Zmod" => {
                p.expect_sym('(')?;
                let col = p.col();
                let m = p.unsigned("a factor order")?;
                if m < 2 {
                    return Err(Error::Parse {
                        line: l.number,
                        column: col,
                        message: format!("finite cyclic factor needs order at least 2, got {m}"),
                    });
                }
                p.expect_sym(')')?;
                Order::Finite(m as u64)
            }
            other => {
                return Err(Error::Parse {
                    line: l.number,
                    column: col,
                    message: format!("expected `Z` or `Zmod`, found `{other}`"),
                })
            }
        };
        p.expect_sym('(')?;
        let col = p.col();
        let name = p.ident("a generator name")?;
        if !names.insert(name.clone()) {
            return Err(Error::Parse { line: l.number, column: col, message: format!("duplicate generator `{name}`") });
        }
        p.expect_sym(')')?;
        factors.push(FactorSpec { name, order });
        if !p.eat_sym('*') {
            break;
        }
    }
    p.expect_end()?;
    GroupPresentation::new(factors)
}

fn parse_module_line(l: &Line<'_>) -> Result<ModuleSpec> {
    let empty = ManifoldData::trivial_w(GroupPresentation::trivial(), ModuleSpec::Zero);
    let mut p = line_parser(l, &empty)?;
    let col = p.col();
    let spec = match p.ident("`zero` or `free(<rank>)`")?.as_str() {
        "zero" => ModuleSpec::Zero,
        "free" => {
            p.expect_sym('(')?;
            let col = p.col();
            let r = p.unsigned("a rank")?;
            if r < 1 {
                return Err(Error::Parse { line: l.number, column: col, message: "free module needs rank at least 1".into() });
            }
            p.expect_sym(')')?;
            ModuleSpec::Free(r as usize)
        }
        other => {
            return Err(Error::Parse {
                line: l.number,
                column: col,
                message: format!("expected `zero` or `free(<rank>)`, found `{other}`"),
            })
        }
    };
    p.expect_end()?;
    Ok(spec)
}

/// `name=value` pairs separated by whitespace or commas.
fn assignments(p: &mut Parser<'_>) -> Result<Vec<(String, usize, i64)>> {
    let mut out = Vec::new();
    while *p.peek() != Tok::End {
        let col = p.col();
        let name = p.ident("`name=value`")?;
        p.expect_sym('=')?;
        let v = p.signed()?;
        out.push((name, col, v));
        p.eat_sym(',');
    }
    Ok(out)
}

pub fn parse_manifold(text: &str) -> Result<ManifoldData> {
    let lines = lines(text)?;
    let mut seen = HashSet::new();
    let (mut group, mut module, mut w1_line, mut w2_line) = (None, None, None, None);
    for l in &lines {
        if BARBELL_KEYS.contains(&l.key) {
            continue;
        }
        if !MANIFOLD_KEYS.contains(&l.key) {
            return Err(unknown_key(l));
        }
        if !seen.insert(l.key) {
            return Err(Error::Parse { line: l.number, column: 1, message: format!("duplicate `{}` line", l.key) });
        }
        match l.key {
            "group" => group = Some(parse_group_line(l)?),
            "module" => module = Some(parse_module_line(l)?),
            "w1" => w1_line = Some(l),
            _ => w2_line = Some(l),
        }
    }
    let last = lines.last().map_or(1, |l| l.number);
    let missing = |field: &str| Error::Parse { line: last, column: 1, message: format!("missing `{field}` line") };
    let group = group.ok_or_else(|| missing("group"))?;
    let module = module.ok_or_else(|| missing("module"))?;
    let base = ManifoldData::trivial_w(group.clone(), module);
    let mut w1 = vec![1i8; group.factors().len()];
    if let Some(l) = w1_line {
        let mut p = line_parser(l, &base)?;
        for (name, column, v) in assignments(&mut p)? {
            let perr = |message: String| Error::Parse { line: l.number, column, message };
            let f = group.factor_index(&name).ok_or_else(|| perr(format!("unknown generator `{name}`")))?;
            w1[f] = match v {
                1 => 1,
                -1 => {
                    if let Order::Finite(m) = group.factor_order(f) {
                        if m % 2 == 1 {
                            return Err(perr(format!(
                                "w1 cannot send `{name}` to -1: Z/{m} has no such homomorphism"
                            )));
                        }
                    }
                    -1
                }
                _ => return Err(perr(format!("w1 value must be +1 or -1, got {v}"))),
            };
        }
    }
    let mut w2 = vec![0u8; module.rank()];
    if let Some(l) = w2_line {
        let mut p = line_parser(l, &base)?;
        for (name, column, v) in assignments(&mut p)? {
            let perr = |message: String| Error::Parse { line: l.number, column, message };
            let j = name
                .strip_prefix('e')
                .and_then(|d| d.parse::<usize>().ok())
                .ok_or_else(|| perr(format!("`{name}` is not a basis element")))?;
            if j >= module.rank() {
                return Err(perr(format!("basis element e{j} out of range for module {module}")));
            }
            if v != 0 && v != 1 {
                return Err(perr(format!("w2 value must be 0 or 1, got {v}")));
            }
            w2[j] = v as u8;
        }
    }
    ManifoldData::new(group, module, w1, w2)
}

pub fn parse_barbell(text: &str, manifold: &ManifoldData) -> Result<BarbellDescriptor> {
    let mut circles = Vec::new();
    for l in lines(text)? {
        if MANIFOLD_KEYS.contains(&l.key) {
            continue;
        }
        if l.key != "circle" {
            return Err(unknown_key(&l));
        }
        let mut p = line_parser(&l, manifold)?;
        p.keyword("delta")?;
        p.expect_sym('=')?;
        let delta = p.word()?;
        p.expect_sym(',')?;
        p.keyword("disk")?;
        p.expect_sym('=')?;
        let disk = p.module_element()?;
        p.expect_end()?;
        circles.push(Circle::new(delta, disk));
    }
    Ok(BarbellDescriptor::new(circles))
}

pub fn format_manifold(manifold: &ManifoldData) -> String {
    let group = manifold.group();
    let mut s = String::from("group: ");
    if group.factors().is_empty() {
        s.push('1');
    }
    for (i, f) in group.factors().iter().enumerate() {
        if i > 0 {
            s.push('*');
        }
        match f.order {
            Order::Infinite => write!(s, "Z({})", f.name).unwrap(),
            Order::Finite(m) => write!(s, "Zmod({m})({})", f.name).unwrap(),
        }
    }
    writeln!(s, "\nmodule: {}", manifold.module()).unwrap();
    if manifold.w1().iter().any(|&v| v < 0) {
        let parts: Vec<String> = group
            .factors()
            .iter()
            .zip(manifold.w1())
            .map(|(f, v)| format!("{}={}", f.name, if *v < 0 { "-1" } else { "+1" }))
            .collect();
        writeln!(s, "w1: {}", parts.join(" ")).unwrap();
    }
    if manifold.w2().contains(&1) {
        let parts: Vec<String> = manifold.w2().iter().enumerate().map(|(j, v)| format!("e{j}={v}")).collect();
        writeln!(s, "w2: {}", parts.join(" ")).unwrap();
    }
    s
}

pub fn format_barbell(b: &BarbellDescriptor, manifold: &ManifoldData) -> String {
    let group = manifold.group();
    b.circles
        .iter()
        .map(|c| format!("circle: delta = {}, disk = {}\n", group.show(&c.delta), c.disk.show(group)))
        .collect()
}
