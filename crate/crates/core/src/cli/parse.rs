//! The line-oriented instance format.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::{AlgebraHom, PresentedAlgebra};
use crate::congruence::{GroupSpec, LevelRing, SubgroupKind};
use crate::dilatation::{Center, MultiCenter};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{parse_polynomial_at, Field, Limits, Polynomial, Registry};

/// A `filtration` line: a group over `ℤ/p^N` with subgroups and levels.
#[derive(Clone, Debug)]
pub struct Filtration {
    pub group: GroupSpec,
    pub ring: LevelRing,
    pub levels: Vec<(SubgroupKind, u32)>,
}

/// Which isomorphism `iso` certifies, with its arguments resolved.
#[derive(Clone, Debug)]
pub enum IsoRequest {
    Monopoly,
    TwoStage(Vec<usize>),
    Localize,
    OpenImmersion { keep: Vec<usize>, assignment: Vec<(usize, usize)> },
    Iterate { element: Polynomial, t: u32 },
    Conic,
    BaseChange(AlgebraHom),
    Forget(Vec<usize>),
}

impl IsoRequest {
    pub const NAMES: [&'static str; 8] = [
        "monopoly",
        "two-stage",
        "localize",
        "open-immersion",
        "iterate",
        "conic",
        "base-change",
        "forget",
    ];
}

#[derive(Clone, Debug)]
pub enum UniversalTarget {
    Hom(AlgebraHom),
    /// All `ℤ/n` with `n ≤` the bound.
    Scan(u32),
}

#[derive(Clone, Debug)]
pub enum RequestKind {
    Present(MultiCenter),
    Check(MultiCenter),
    Iso(MultiCenter, IsoRequest),
    Oracle(MultiCenter),
    Universal(MultiCenter, UniversalTarget),
    Congruence { s: Filtration, r: Filtration },
    Normalizer { filtration: Filtration, k: SubgroupKind },
    Rost { base: Arc<PresentedAlgebra>, i: Ideal, j: Ideal },
}

/// A resolved request and the text it came from.
#[derive(Clone, Debug)]
pub struct Request {
    pub text: String,
    pub line: usize,
    pub kind: RequestKind,
}

#[derive(Clone, Debug)]
enum Decl {
    Ring(Arc<PresentedAlgebra>),
    Ideal(String, Ideal),
    Elem(String, Polynomial),
    Center(MultiCenter),
    Hom(AlgebraHom),
    Filtration(Filtration),
}

impl Decl {
    fn kind(&self) -> &'static str {
        match self {
            Decl::Ring(_) => "ring",
            Decl::Ideal(..) => "ideal",
            Decl::Elem(..) => "elem",
            Decl::Center(_) => "center",
            Decl::Hom(_) => "hom",
            Decl::Filtration(_) => "filtration",
        }
    }
}

/// A parsed and validated instance file.
#[derive(Clone, Debug, Default)]
pub struct InstanceFile {
    decls: HashMap<String, Decl>,
    /// Rings that something already refers to; `rels` may not follow.
    used: Vec<String>,
    centers: Vec<String>,
    pub requests: Vec<Request>,
    limits: Limits,
}

/// A span of a line: byte offset of `text` within the line.
#[derive(Clone, Copy, Debug)]
struct Span<'a> {
    text: &'a str,
    offset: usize,
}

impl<'a> Span<'a> {
    fn trim(self) -> Span<'a> {
        let lead = self.text.len() - self.text.trim_start().len();
        Span {
            text: self.text.trim(),
            offset: self.offset + lead,
        }
    }

    fn slice(self, from: usize, to: usize) -> Span<'a> {
        Span {
            text: &self.text[from..to],
            offset: self.offset + from,
        }
    }

    fn rest(self, from: usize) -> Span<'a> {
        self.slice(from, self.text.len())
    }
}

struct LineCtx {
    line: usize,
}

impl LineCtx {
    fn err(&self, at: Span<'_>, msg: impl Into<String>) -> Error {
        Error::parse(self.line, at.offset + 1, msg)
    }
}

/// Splits at top-level occurrences of `sep`, outside `()` and `[]`.
fn split_top(s: Span<'_>, sep: char) -> Vec<Span<'_>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ if c == sep && depth == 0 => {
                out.push(s.slice(start, i).trim());
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(s.rest(start).trim());
    out
}

/// Strips one pair of enclosing delimiters.
fn enclosed<'a>(cx: &LineCtx, s: Span<'a>, open: char, close: char) -> Result<Span<'a>> {
    let s = s.trim();
    if s.text.starts_with(open) && s.text.ends_with(close) && s.text.len() >= 2 {
        Ok(s.slice(1, s.text.len() - 1))
    } else {
        Err(cx.err(s, format!("expected `{open}…{close}`")))
    }
}

fn identifier<'a>(cx: &LineCtx, s: Span<'a>, what: &str) -> Result<&'a str> {
    let s = s.trim();
    let ok = s.text.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && s.text.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if ok {
        Ok(s.text)
    } else {
        Err(cx.err(s, format!("expected {what}, found `{}`", s.text)))
    }
}

/// `head = tail`, returning both sides.
fn equation<'a>(cx: &LineCtx, s: Span<'a>) -> Result<(Span<'a>, Span<'a>)> {
    match s.text.find('=') {
        Some(i) => Ok((s.slice(0, i).trim(), s.rest(i + 1).trim())),
        None => Err(cx.err(s, "expected `=`")),
    }
}

fn is_word_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

impl InstanceFile {
    pub fn parse_str(text: &str, limits: Limits) -> Result<InstanceFile> {
        let mut inst = InstanceFile {
            limits,
            ..Default::default()
        };
        for (k, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            let span = Span { text: line, offset: 0 }.trim();
            if span.text.is_empty() {
                continue;
            }
            inst.statement(&LineCtx { line: k + 1 }, span)?;
        }
        Ok(inst)
    }

    /// Parses `request`-style text given outside the file (line 0).
    pub fn push_request(&mut self, text: &str) -> Result<()> {
        let span = Span { text, offset: 0 }.trim();
        self.request(&LineCtx { line: 0 }, span)
    }

    fn statement(&mut self, cx: &LineCtx, s: Span<'_>) -> Result<()> {
        let kw_end = s.text.find(char::is_whitespace).unwrap_or(s.text.len());
        let keyword = s.slice(0, kw_end);
        let rest = s.rest(kw_end).trim();
        match keyword.text {
            "ring" => self.ring(cx, rest),
            "rels" => self.rels(cx, rest),
            "ideal" => self.ideal(cx, rest),
            "elem" => self.elem(cx, rest),
            "center" => self.center(cx, rest),
            "hom" => self.hom(cx, rest),
            "filtration" => self.filtration(cx, rest),
            "request" => self.request(cx, rest),
            other => Err(cx.err(keyword, format!("unknown statement `{other}`"))),
        }
    }

    fn declare(&mut self, cx: &LineCtx, at: Span<'_>, name: &str, d: Decl) -> Result<()> {
        if let Some(old) = self.decls.get(name) {
            return Err(cx.err(at, format!("`{name}` is already declared as a {}", old.kind())));
        }
        if matches!(d, Decl::Center(_)) {
            self.centers.push(name.to_string());
        }
        self.decls.insert(name.to_string(), d);
        Ok(())
    }

    fn ring_named(&mut self, cx: &LineCtx, at: Span<'_>) -> Result<Arc<PresentedAlgebra>> {
        let name = identifier(cx, at, "a ring name")?;
        match self.decls.get(name) {
            Some(Decl::Ring(a)) => {
                let a = a.clone();
                self.used.push(name.to_string());
                Ok(a)
            }
            Some(d) => Err(cx.err(at, format!("`{name}` is a {}, not a ring", d.kind()))),
            None => Err(cx.err(at, format!("undeclared ring `{name}`"))),
        }
    }

    /// `NAME in RING` or `NAME on RING`.
    fn owned_name<'a>(&mut self, cx: &LineCtx, head: Span<'a>, joiner: &str) -> Result<(&'a str, Span<'a>, Arc<PresentedAlgebra>)> {
        let parts: Vec<&str> = head.text.split_whitespace().collect();
        if parts.len() != 3 || parts[1] != joiner {
            return Err(cx.err(head, format!("expected `NAME {joiner} RING`")));
        }
        let name_span = head.slice(0, parts[0].len());
        let name = identifier(cx, name_span, "a name")?;
        let ring_at = head.rest(head.text.rfind(parts[2]).unwrap());
        let ring = self.ring_named(cx, ring_at)?;
        Ok((name, name_span, ring))
    }

    fn poly(&self, cx: &LineCtx, ring: &Arc<PresentedAlgebra>, s: Span<'_>) -> Result<Polynomial> {
        let s = s.trim();
        parse_polynomial_at(ring.registry(), s.text, cx.line, s.offset + 1)
    }

    fn poly_list(&self, cx: &LineCtx, ring: &Arc<PresentedAlgebra>, s: Span<'_>) -> Result<Vec<Polynomial>> {
        let inner = enclosed(cx, s, '(', ')')?;
        if inner.text.trim().is_empty() {
            return Ok(Vec::new());
        }
        split_top(inner, ',').into_iter().map(|p| self.poly(cx, ring, p)).collect()
    }

    fn ring(&mut self, cx: &LineCtx, s: Span<'_>) -> Result<()> {
        let (head, tail) = equation(cx, s)?;
        let name = identifier(cx, head, "a ring name")?;
        let open = tail.text.find('[').ok_or_else(|| cx.err(tail, "expected `[` after the field"))?;
        let field_span = tail.slice(0, open).trim();
        let field = match field_span.text {
            "QQ" => Field::Rational,
            f if f.starts_with("Fp(") && f.ends_with(')') => {
                let inner = field_span.slice(3, f.len() - 1);
                let p: u64 = inner
                    .text
                    .trim()
                    .parse()
                    .map_err(|_| cx.err(inner, format!("`{}` is not a number", inner.text)))?;
                Field::prime(p).map_err(|_| cx.err(inner, format!("{p} is not prime")))?
            }
            other => return Err(cx.err(field_span, format!("unknown field `{other}`; use QQ or Fp(p)"))),
        };
        let vars_span = enclosed(cx, tail.rest(open), '[', ']')?;
        let mut vars = Vec::new();
        if !vars_span.text.trim().is_empty() {
            for v in split_top(vars_span, ',') {
                let name = identifier(cx, v, "a variable name")?;
                if vars.contains(&name) {
                    return Err(cx.err(v, format!("variable `{name}` declared twice")));
                }
                vars.push(name);
            }
        }
        let reg = Registry::with_limits(field, vars, self.limits).map_err(|e| cx.err(vars_span, e.to_string()))?;
        self.declare(cx, head, name, Decl::Ring(PresentedAlgebra::free(&reg)))
    }

    fn rels(&mut self, cx: &LineCtx, s: Span<'_>) -> Result<()> {
        let (head, tail) = equation(cx, s)?;
        let name = identifier(cx, head, "a ring name")?;
        let ring = match self.decls.get(name) {
            Some(Decl::Ring(a)) => a.clone(),
            Some(d) => return Err(cx.err(head, format!("`{name}` is a {}, not a ring", d.kind()))),
            None => return Err(cx.err(head, format!("undeclared ring `{name}`"))),
        };
        if !ring.relations().gens().is_empty() {
            return Err(cx.err(head, format!("relations for `{name}` are already given")));
        }
        if self.used.iter().any(|u| u == name) {
            return Err(cx.err(head, format!("relations for `{name}` must come before anything that uses it")));
        }
        let gens = self.poly_list(cx, &ring, tail)?;
        let alg = PresentedAlgebra::new(Ideal::new(ring.registry(), gens)?);
        self.decls.insert(name.to_string(), Decl::Ring(alg));
        Ok(())
    }

    fn ideal(&mut self, cx: &LineCtx, s: Span<'_>) -> Result<()> {
        let (head, tail) = equation(cx, s)?;
        let (name, at, ring) = self.owned_name(cx, head, "in")?;
        let gens = self.poly_list(cx, &ring, tail)?;
        let ring_name = ring_name_of(&head);
        self.declare(cx, at, name, Decl::Ideal(ring_name, Ideal::new(ring.registry(), gens)?))
    }

    fn elem(&mut self, cx: &LineCtx, s: Span<'_>) -> Result<()> {
        let (head, tail) = equation(cx, s)?;
        let (name, at, ring) = self.owned_name(cx, head, "in")?;
        let p = self.poly(cx, &ring, tail)?;
        let ring_name = ring_name_of(&head);
        self.declare(cx, at, name, Decl::Elem(ring_name, p))
    }

    fn center(&mut self, cx: &LineCtx, s: Span<'_>) -> Result<()> {
        let (head, tail) = equation(cx, s)?;
        let (name, at, ring) = self.owned_name(cx, head, "on")?;
        let ring_name = ring_name_of(&head);
        let mut centers = Vec::new();
        if !tail.text.is_empty() && tail.text != "{}" {
            for entry in split_top(tail, ',') {
                let inner = enclosed(cx, entry, '[', ']')?;
                let parts = split_top(inner, '/');
                if parts.len() < 2 {
                    return Err(cx.err(inner, "expected `[IDEAL / ELEM]`"));
                }
                // rational coefficients may contain further `/`
                let ideal_part = parts[0];
                let slash = ideal_part.offset + ideal_part.text.len() - inner.offset;
                let den_part = inner.rest(inner.text[slash..].find('/').unwrap() + slash + 1).trim();
                let ideal = self.ideal_ref(cx, &ring, &ring_name, ideal_part)?;
                let den = self.elem_ref(cx, &ring, &ring_name, den_part)?;
                centers.push(Center::new(ideal, den)?);
            }
        }
        let mc = MultiCenter::new(&ring, centers)?;
        self.declare(cx, at, name, Decl::Center(mc))
    }

    /// A declared ideal name or an inline `(g1, …)`.
    fn ideal_ref(&self, cx: &LineCtx, ring: &Arc<PresentedAlgebra>, ring_name: &str, s: Span<'_>) -> Result<Ideal> {
        if s.text.starts_with('(') {
            return Ideal::new(ring.registry(), self.poly_list(cx, ring, s)?);
        }
        let name = identifier(cx, s, "an ideal name or `(…)`")?;
        match self.decls.get(name) {
            Some(Decl::Ideal(r, i)) if r == ring_name => Ok(i.clone()),
            Some(Decl::Ideal(r, _)) => Err(cx.err(s, format!("ideal `{name}` lives in `{r}`, not `{ring_name}`"))),
            Some(d) => Err(cx.err(s, format!("`{name}` is a {}, not an ideal", d.kind()))),
            None => Err(cx.err(s, format!("undeclared ideal `{name}`"))),
        }
    }

    /// A declared element name or a polynomial.
    fn elem_ref(&self, cx: &LineCtx, ring: &Arc<PresentedAlgebra>, ring_name: &str, s: Span<'_>) -> Result<Polynomial> {
        if let Some(Decl::Elem(r, p)) = self.decls.get(s.text) {
            if r == ring_name {
                return Ok(p.clone());
            }
            return Err(cx.err(s, format!("elem `{}` lives in `{r}`, not `{ring_name}`", s.text)));
        }
        if s.text.chars().all(is_word_char) && ring.registry().index_of(s.text).is_none() && !s.text.chars().all(|c| c.is_ascii_digit()) {
            return Err(cx.err(s, format!("`{}` is neither a declared elem nor a variable of `{ring_name}`", s.text)));
        }
        self.poly(cx, ring, s)
    }

    /// `hom NAME : A -> B = (images of A's variables)`.
    fn hom(&mut self, cx: &LineCtx, s: Span<'_>) -> Result<()> {
        let (head, tail) = equation(cx, s)?;
        let colon = head.text.find(':').ok_or_else(|| cx.err(head, "expected `NAME : SOURCE -> TARGET`"))?;
        let name_span = head.slice(0, colon).trim();
        let name = identifier(cx, name_span, "a hom name")?;
        let maps = head.rest(colon + 1).trim();
        let arrow = maps.text.find("->").ok_or_else(|| cx.err(maps, "expected `SOURCE -> TARGET`"))?;
        let src = self.ring_named(cx, maps.slice(0, arrow).trim())?;
        let tgt = self.ring_named(cx, maps.rest(arrow + 2).trim())?;
        let images = self.poly_list(cx, &tgt, tail)?;
        if images.len() != src.nvars() {
            return Err(cx.err(
                tail,
                format!("{} images given for {} source variables", images.len(), src.nvars()),
            ));
        }
        let h = AlgebraHom::new(&src, &tgt, images)?;
        self.declare(cx, name_span, name, Decl::Hom(h))
    }

    /// `filtration NAME = group SL(2), p, N, (H_0, r_0), (H_1, r_1), …`.
    fn filtration(&mut self, cx: &LineCtx, s: Span<'_>) -> Result<()> {
        let (head, tail) = equation(cx, s)?;
        let name = identifier(cx, head, "a filtration name")?;
        let parts = split_top(tail, ',');
        if parts.len() < 4 {
            return Err(cx.err(tail, "expected `group G(n), p, N, (H, r), …`"));
        }
        let g = parts[0];
        let gtext = g.text.strip_prefix("group").ok_or_else(|| cx.err(g, "expected `group GL(n)` or `group SL(n)`"))?.trim();
        let group = if let Some(n) = gtext.strip_prefix("GL(").and_then(|x| x.strip_suffix(')')) {
            GroupSpec::gl(n.trim().parse().map_err(|_| cx.err(g, format!("bad rank `{n}`")))?)
        } else if let Some(n) = gtext.strip_prefix("SL(").and_then(|x| x.strip_suffix(')')) {
            GroupSpec::sl(n.trim().parse().map_err(|_| cx.err(g, format!("bad rank `{n}`")))?)
        } else {
            return Err(cx.err(g, format!("unknown group `{gtext}`")));
        };
        if group.n == 0 || group.n > 4 {
            return Err(cx.err(g, "rank must be between 1 and 4"));
        }
        let num = |sp: Span<'_>| -> Result<u32> {
            sp.text.parse().map_err(|_| cx.err(sp, format!("`{}` is not a number", sp.text)))
        };
        let p = num(parts[1])?;
        let level = num(parts[2])?;
        let ring = LevelRing::new(p, level).map_err(|e| cx.err(parts[1], e.to_string()))?;
        let mut levels = Vec::new();
        for pair in &parts[3..] {
            let inner = enclosed(cx, *pair, '(', ')')?;
            let bits = split_top(inner, ',');
            if bits.len() != 2 {
                return Err(cx.err(inner, "expected `(H, r)`"));
            }
            let h: SubgroupKind = bits[0].text.parse().map_err(|e: Error| cx.err(bits[0], e.to_string()))?;
            h.validate(group.n).map_err(|e| cx.err(bits[0], e.to_string()))?;
            let r = num(bits[1])?;
            if r > level {
                return Err(cx.err(bits[1], format!("level {r} exceeds N = {level}")));
            }
            levels.push((h, r));
        }
        self.declare(cx, head, name, Decl::Filtration(Filtration { group, ring, levels }))
    }

    fn center_named(&self, name: &str) -> Option<&MultiCenter> {
        match self.decls.get(name) {
            Some(Decl::Center(c)) => Some(c),
            _ => None,
        }
    }

    fn request(&mut self, cx: &LineCtx, s: Span<'_>) -> Result<()> {
        let mut words: Vec<Span<'_>> = Vec::new();
        let mut start = None;
        for (i, c) in s.text.char_indices().chain(std::iter::once((s.text.len(), ' '))) {
            match (c.is_whitespace(), start) {
                (true, Some(b)) => {
                    words.push(s.slice(b, i));
                    start = None;
                }
                (false, None) => start = Some(i),
                _ => {}
            }
        }
        let Some((&cmd, mut args)) = words.split_first() else {
            return Err(cx.err(s, "empty request"));
        };
        let mut iso_name = None;
        if cmd.text == "iso" {
            let Some((&name, rest)) = args.split_first() else {
                return Err(cx.err(cmd, format!("`iso` needs one of {}", IsoRequest::NAMES.join(", "))));
            };
            if !IsoRequest::NAMES.contains(&name.text) {
                return Err(cx.err(name, format!("unknown iso `{}`; expected one of {}", name.text, IsoRequest::NAMES.join(", "))));
            }
            iso_name = Some(name);
            args = rest;
        }
        let needs_center = matches!(cmd.text, "present" | "check" | "iso" | "oracle" | "universal");
        let mut center = None;
        if needs_center {
            if let Some((first, rest)) = args.split_first() {
                if let Some(c) = self.center_named(first.text) {
                    center = Some(c.clone());
                    args = rest;
                } else if iso_name.is_none() && cmd.text != "universal" && !self.decls.contains_key(first.text) {
                    return Err(cx.err(*first, format!("undeclared center `{}`", first.text)));
                }
            }
            if center.is_none() {
                let first = self.centers.first().ok_or_else(|| cx.err(cmd, "no center is declared"))?;
                center = self.center_named(first).cloned();
            }
        }
        let expect_args = |n: usize, args: &[Span<'_>], usage: &str| -> Result<()> {
            if args.len() == n {
                Ok(())
            } else if args.len() > n {
                Err(cx.err(args[n], format!("unexpected argument; usage: {usage}")))
            } else {
                Err(cx.err(s, format!("missing argument; usage: {usage}")))
            }
        };
        let positions = |sp: Span<'_>, len: usize| -> Result<Vec<usize>> {
            sp.text
                .split(',')
                .map(|x| match x.trim().parse::<usize>() {
                    Ok(k) if (1..=len).contains(&k) => Ok(k - 1),
                    _ => Err(cx.err(sp, format!("`{x}` is not a center position in 1..={len}"))),
                })
                .collect()
        };
        let kind = match cmd.text {
            "present" => {
                expect_args(0, args, "present [CENTER]")?;
                RequestKind::Present(center.unwrap())
            }
            "check" => {
                expect_args(0, args, "check [CENTER]")?;
                RequestKind::Check(center.unwrap())
            }
            "oracle" => {
                expect_args(0, args, "oracle [CENTER]")?;
                RequestKind::Oracle(center.unwrap())
            }
            "iso" => {
                let c = center.unwrap();
                let name = iso_name.unwrap();
                let iso = match name.text {
                    "monopoly" => {
                        expect_args(0, args, "iso monopoly [CENTER]")?;
                        IsoRequest::Monopoly
                    }
                    "localize" => {
                        expect_args(0, args, "iso localize [CENTER]")?;
                        IsoRequest::Localize
                    }
                    "conic" => {
                        expect_args(0, args, "iso conic [CENTER]")?;
                        IsoRequest::Conic
                    }
                    "two-stage" => {
                        expect_args(1, args, "iso two-stage [CENTER] i,j,…")?;
                        IsoRequest::TwoStage(positions(args[0], c.len())?)
                    }
                    "forget" => {
                        expect_args(1, args, "iso forget [CENTER] i,j,…")?;
                        IsoRequest::Forget(positions(args[0], c.len())?)
                    }
                    "open-immersion" => {
                        let usage = "iso open-immersion [CENTER] keep=i,… assign=i:k,…";
                        expect_args(2, args, usage)?;
                        if !args[0].text.starts_with("keep=") {
                            return Err(cx.err(args[0], format!("usage: {usage}")));
                        }
                        let keep = positions(args[0].rest(5), c.len())?;
                        let assign = args[1]
                            .text
                            .strip_prefix("assign=")
                            .ok_or_else(|| cx.err(args[1], format!("usage: {usage}")))?;
                        let mut assignment = Vec::new();
                        for pair in assign.split(',').filter(|p| !p.is_empty()) {
                            let (i, k) = pair.split_once(':').ok_or_else(|| cx.err(args[1], format!("`{pair}` is not `i:k`")))?;
                            let i = positions(Span { text: i, offset: args[1].offset }, c.len())?[0];
                            let k = positions(Span { text: k, offset: args[1].offset }, c.len())?[0];
                            assignment.push((i, k));
                        }
                        IsoRequest::OpenImmersion { keep, assignment }
                    }
                    "iterate" => {
                        expect_args(2, args, "iso iterate [CENTER] ELEM T")?;
                        let ring_name = self.ring_name_of_center(c.base()).unwrap_or_default();
                        let element = self.elem_ref(cx, c.base(), &ring_name, args[0])?;
                        let t = args[1].text.parse().map_err(|_| cx.err(args[1], "T must be a number"))?;
                        IsoRequest::Iterate { element, t }
                    }
                    "base-change" => {
                        expect_args(1, args, "iso base-change [CENTER] HOM")?;
                        IsoRequest::BaseChange(self.hom_named(cx, args[0])?)
                    }
                    _ => unreachable!("names are checked above"),
                };
                RequestKind::Iso(c, iso)
            }
            "universal" => {
                let c = center.unwrap();
                let target = match args {
                    [h] => UniversalTarget::Hom(self.hom_named(cx, *h)?),
                    [w, n] if w.text == "scan" => {
                        UniversalTarget::Scan(n.text.parse().map_err(|_| cx.err(*n, "scan bound must be a number"))?)
                    }
                    _ => return Err(cx.err(s, "usage: universal [CENTER] HOM | universal [CENTER] scan N")),
                };
                RequestKind::Universal(c, target)
            }
            "congruence" => match args {
                [a, b] => {
                    let fs = self.filtration_named(cx, *a)?;
                    let fr = self.filtration_named(cx, *b)?;
                    if fs.group != fr.group || fs.ring != fr.ring {
                        return Err(cx.err(*b, "filtrations must share the group and the level ring"));
                    }
                    let hs = |f: &Filtration| f.levels.iter().map(|(h, _)| h.clone()).collect::<Vec<_>>();
                    if hs(&fs) != hs(&fr) {
                        return Err(cx.err(*b, "filtrations must list the same subgroups"));
                    }
                    RequestKind::Congruence { s: fs, r: fr }
                }
                [f, w, k] if w.text == "normalizer" => {
                    let filtration = self.filtration_named(cx, *f)?;
                    let k: SubgroupKind = k.text.parse().map_err(|e: Error| cx.err(*k, e.to_string()))?;
                    RequestKind::Normalizer { filtration, k }
                }
                _ => return Err(cx.err(s, "usage: congruence S R | congruence F normalizer K")),
            },
            "rost" => {
                expect_args(2, args, "rost I J")?;
                let (ri, i) = self.ideal_named(cx, args[0])?;
                let (rj, j) = self.ideal_named(cx, args[1])?;
                if ri != rj {
                    return Err(cx.err(args[1], format!("`{}` lives in `{rj}`, not `{ri}`", args[1].text)));
                }
                let base = match self.decls.get(&ri) {
                    Some(Decl::Ring(a)) => a.clone(),
                    _ => unreachable!("ideals are declared on rings"),
                };
                RequestKind::Rost { base, i, j }
            }
            other => {
                return Err(cx.err(
                    cmd,
                    format!("unknown command `{other}`; expected present, check, iso, oracle, universal, congruence or rost"),
                ))
            }
        };
        self.requests.push(Request {
            text: s.text.to_string(),
            line: cx.line,
            kind,
        });
        Ok(())
    }

    fn ring_name_of_center(&self, a: &Arc<PresentedAlgebra>) -> Option<String> {
        self.decls.iter().find_map(|(k, d)| match d {
            Decl::Ring(r) if Arc::ptr_eq(r, a) => Some(k.clone()),
            _ => None,
        })
    }

    fn hom_named(&self, cx: &LineCtx, s: Span<'_>) -> Result<AlgebraHom> {
        match self.decls.get(s.text) {
            Some(Decl::Hom(h)) => Ok(h.clone()),
            Some(d) => Err(cx.err(s, format!("`{}` is a {}, not a hom", s.text, d.kind()))),
            None => Err(cx.err(s, format!("undeclared hom `{}`", s.text))),
        }
    }

    fn filtration_named(&self, cx: &LineCtx, s: Span<'_>) -> Result<Filtration> {
        match self.decls.get(s.text) {
            Some(Decl::Filtration(f)) => Ok(f.clone()),
            Some(d) => Err(cx.err(s, format!("`{}` is a {}, not a filtration", s.text, d.kind()))),
            None => Err(cx.err(s, format!("undeclared filtration `{}`", s.text))),
        }
    }

    fn ideal_named(&self, cx: &LineCtx, s: Span<'_>) -> Result<(String, Ideal)> {
        match self.decls.get(s.text) {
            Some(Decl::Ideal(r, i)) => Ok((r.clone(), i.clone())),
            Some(d) => Err(cx.err(s, format!("`{}` is a {}, not an ideal", s.text, d.kind()))),
            None => Err(cx.err(s, format!("undeclared ideal `{}`", s.text))),
        }
    }
}

/// The ring name in a checked `NAME in RING` head.
fn ring_name_of(head: &Span<'_>) -> String {
    head.text.split_whitespace().nth(2).unwrap_or_default().to_string()
}
