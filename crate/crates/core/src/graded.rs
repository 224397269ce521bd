//! Sparse elements of the free graded-commutative algebra `Λ(g*) ⊗ S(g*) ⊗ A`.
//!
//! Both factors are free graded-commutative: the Weil factor on odd `θ^i`
//! (degree 1) and even `φ^i` (degree 2), and every supported module `A` on its
//! own odd and even generators. A [`Monomial`] therefore stores one odd mask
//! and one exponent vector over the concatenated generator lists. The odd
//! generators are ordered `θ^1 < … < θ^n < (odd generators of A)`, which is
//! what makes `1 ⊗ P` pick up the Koszul sign of the Weil factor.
//!
//! The [`Ambient`] fixes the layout, the degree truncation `N` and (for
//! polynomial forms) the polynomial weight cap. Products drop every term
//! outside the truncation.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type Exponents = SmallVec<[u16; 8]>;

/// Maximum number of odd generators (Weil + module) in one ambient algebra.
pub const MAX_ODD_GENERATORS: usize = 64;

/// A monomial over the concatenated generators, sign-normalized: odd
/// generators appear at most once and in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
  pub odd: u64,
  pub even: Exponents,
}

/// A monomial of the module factor alone, in module-local generator numbering.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ModMono {
  pub odd: u64,
  pub even: Exponents,
}

/// Shape of the module factor `A`: counts and degrees of its generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleLayout {
  pub odd_count: usize,
  pub even_count: usize,
  /// Degree of every even generator (0 for polynomial coefficients, 2 for a wrapped Weil algebra).
  pub even_degree: u32,
  /// Cap on `(#odd + Σ even exponents)` of the module factor. Required when
  /// `even_degree == 0`, since each degree is otherwise infinite-dimensional.
  pub weight_cap: Option<u32>,
}

impl ModuleLayout {
  pub fn point() -> Self { Self { odd_count: 0, even_count: 0, even_degree: 0, weight_cap: None } }

  pub fn degree(&self, m: &ModMono) -> u32 {
    m.odd.count_ones() + self.even_degree * m.even.iter().map(|&e| e as u32).sum::<u32>()
  }

  pub fn weight(&self, m: &ModMono) -> u32 { m.odd.count_ones() + m.even.iter().map(|&e| e as u32).sum::<u32>() }

  /// All module monomials of degree `d` in canonical order: fewer even
  /// factors first, then odd part, then even part, each descending-lex.
  pub fn basis_of_degree(&self, d: u32) -> Vec<ModMono> {
    let mut out = Vec::new();
    if (d as usize) > self.odd_count && self.even_degree == 0 {
      return out;
    }
    for a in 0..=(self.odd_count.min(d as usize)) {
      let rest = d - a as u32;
      let even_totals: Vec<u32> = if self.even_degree == 0 {
        if rest != 0 {
          continue;
        }
        let cap = self.weight_cap.unwrap_or(0);
        if (a as u32) > cap {
          continue;
        }
        (0..=(cap - a as u32)).collect()
      } else {
        if rest % self.even_degree != 0 {
          continue;
        }
        let total = rest / self.even_degree;
        if let Some(cap) = self.weight_cap {
          if a as u32 + total > cap {
            continue;
          }
        }
        vec![total]
      };
      if self.even_count == 0 && even_totals.iter().all(|&t| t > 0) {
        continue;
      }
      for mask in subsets_of_size(self.odd_count, a) {
        for &total in &even_totals {
          for even in exponent_vectors(self.even_count, total) {
            out.push(ModMono { odd: mask, even });
          }
        }
      }
    }
    out.sort_by(|x, y| self.canonical_cmp(x, y));
    out
  }

  pub fn canonical_cmp(&self, x: &ModMono, y: &ModMono) -> Ordering {
    let sx: u32 = x.even.iter().map(|&e| e as u32).sum();
    let sy: u32 = y.even.iter().map(|&e| e as u32).sum();
    sx.cmp(&sy).then_with(|| desc_lex_mask(x.odd, y.odd)).then_with(|| desc_lex_exponents(&x.even, &y.even))
  }
}

/// Descending lexicographic order on 0/1 vectors where bit 0 is the first coordinate.
pub fn desc_lex_mask(a: u64, b: u64) -> Ordering {
  if a == b {
    return Ordering::Equal;
  }
  let diff = a ^ b;
  let low = diff & diff.wrapping_neg();
  if a & low != 0 {
    Ordering::Less
  } else {
    Ordering::Greater
  }
}

pub fn desc_lex_exponents(a: &[u16], b: &[u16]) -> Ordering {
  for (x, y) in a.iter().zip(b) {
    match y.cmp(x) {
      Ordering::Equal => continue,
      ord => return ord,
    }
  }
  Ordering::Equal
}

/// All `k`-subsets of `{0..n}` as bit masks, ascending.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<u64> {
  fn rec(start: usize, n: usize, k: usize, mask: u64, out: &mut Vec<u64>) {
    if k == 0 {
      out.push(mask);
      return;
    }
    for i in start..n {
      if n - i < k {
        break;
      }
      rec(i + 1, n, k - 1, mask | (1 << i), out);
    }
  }
  let mut out = Vec::new();
  if k <= n {
    rec(0, n, k, 0, &mut out);
  }
  out
}

/// All exponent vectors of length `vars` summing to `total`.
pub fn exponent_vectors(vars: usize, total: u32) -> Vec<Exponents> {
  fn rec(pos: usize, vars: usize, left: u32, cur: &mut Exponents, out: &mut Vec<Exponents>) {
    if pos + 1 == vars {
      cur.push(left as u16);
      out.push(cur.clone());
      cur.pop();
      return;
    }
    for e in (0..=left).rev() {
      cur.push(e as u16);
      rec(pos + 1, vars, left - e, cur, out);
      cur.pop();
    }
  }
  let mut out = Vec::new();
  if vars == 0 {
    if total == 0 {
      out.push(Exponents::new());
    }
    return out;
  }
  rec(0, vars, total, &mut Exponents::new(), &mut out);
  out
}

/// Sign and product of two odd masks: `None` if they share a generator.
#[inline]
pub fn merge_odd(a: u64, b: u64) -> Option<(u64, bool)> {
  if a & b != 0 {
    return None;
  }
  let mut negative = false;
  let mut rest = b;
  while rest != 0 {
    let y = rest.trailing_zeros();
    rest &= rest - 1;
    let above = if y >= 63 { 0 } else { a >> (y + 1) };
    if above.count_ones() % 2 == 1 {
      negative = !negative;
    }
  }
  Some((a | b, negative))
}

/// A finite linear combination of monomials; zero coefficients never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedElement {
  terms: BTreeMap<Monomial, Scalar>,
}

impl GradedElement {
  pub fn zero() -> Self { Self::default() }

  pub fn from_monomial(m: Monomial) -> Self { Self::term(m, Scalar::one()) }

  pub fn term(m: Monomial, c: Scalar) -> Self {
    let mut x = Self::zero();
    x.add_term(m, c);
    x
  }

  pub fn is_zero(&self) -> bool { self.terms.is_empty() }

  pub fn len(&self) -> usize { self.terms.len() }

  pub fn is_empty(&self) -> bool { self.terms.is_empty() }

  pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> { self.terms.iter() }

  pub fn coefficient(&self, m: &Monomial) -> Scalar { self.terms.get(m).cloned().unwrap_or_else(Scalar::zero) }

  pub fn add_term(&mut self, m: Monomial, c: Scalar) {
    if c.is_zero() {
      return;
    }
    match self.terms.entry(m) {
      std::collections::btree_map::Entry::Vacant(v) => {
        v.insert(c);
      },
      std::collections::btree_map::Entry::Occupied(mut o) => {
        *o.get_mut() += &c;
        if o.get().is_zero() {
          o.remove();
        }
      },
    }
  }

  pub fn add_scaled(&mut self, other: &GradedElement, a: &Scalar) {
    if a.is_zero() {
      return;
    }
    for (m, c) in &other.terms {
      self.add_term(m.clone(), if a.is_one() { c.clone() } else { a * c });
    }
  }

  pub fn add_assign(&mut self, other: &GradedElement) { self.add_scaled(other, &Scalar::one()) }

  pub fn sub_assign(&mut self, other: &GradedElement) { self.add_scaled(other, &-Scalar::one()) }

  pub fn scale(&self, a: &Scalar) -> GradedElement {
    let mut out = GradedElement::zero();
    out.add_scaled(self, a);
    out
  }

  pub fn sub(&self, other: &GradedElement) -> GradedElement {
    let mut out = self.clone();
    out.sub_assign(other);
    out
  }

  pub fn add(&self, other: &GradedElement) -> GradedElement {
    let mut out = self.clone();
    out.add_assign(other);
    out
  }

  pub fn retain(&mut self, mut keep: impl FnMut(&Monomial) -> bool) { self.terms.retain(|m, _| keep(m)); }
}

impl FromIterator<(Monomial, Scalar)> for GradedElement {
  fn from_iter<T: IntoIterator<Item = (Monomial, Scalar)>>(iter: T) -> Self {
    let mut out = GradedElement::zero();
    for (m, c) in iter {
      out.add_term(m, c);
    }
    out
  }
}

/// The truncated algebra `W(g) ⊗ A` for fixed Weil rank `n` and module layout.
#[derive(Clone, Debug)]
pub struct Ambient {
  n: usize,
  layout: ModuleLayout,
  truncation: u32,
  module_basis: Vec<ModMono>,
  module_index: HashMap<ModMono, usize>,
}

impl Ambient {
  pub fn new(n: usize, layout: ModuleLayout, truncation: u32) -> Result<Self> {
    if n + layout.odd_count > MAX_ODD_GENERATORS {
      return Err(Error::Invalid(format!("at most {MAX_ODD_GENERATORS} odd generators are supported")));
    }
    if layout.even_count > 0 && layout.even_degree == 0 && layout.weight_cap.is_none() {
      return Err(Error::Invalid("degree-0 even generators need a weight cap".into()));
    }
    let mut module_basis = Vec::new();
    for d in 0..=truncation {
      module_basis.extend(layout.basis_of_degree(d));
    }
    let module_index = module_basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    Ok(Self { n, layout, truncation, module_basis, module_index })
  }

  /// `W(g)` alone: the module factor is the point.
  pub fn weil(n: usize, truncation: u32) -> Result<Self> { Self::new(n, ModuleLayout::point(), truncation) }

  pub fn n(&self) -> usize { self.n }

  pub fn layout(&self) -> &ModuleLayout { &self.layout }

  pub fn truncation(&self) -> u32 { self.truncation }

  pub fn with_truncation(&self, truncation: u32) -> Result<Self> {
    Self::new(self.n, self.layout.clone(), truncation)
  }

  pub fn even_len(&self) -> usize { self.n + self.layout.even_count }

  pub fn odd_len(&self) -> usize { self.n + self.layout.odd_count }

  pub fn unit_monomial(&self) -> Monomial { Monomial { odd: 0, even: smallvec::smallvec![0; self.even_len()] } }

  pub fn unit(&self) -> GradedElement { GradedElement::from_monomial(self.unit_monomial()) }

  pub fn theta_monomial(&self, i: usize) -> Monomial {
    let mut m = self.unit_monomial();
    m.odd = 1 << i;
    m
  }

  pub fn phi_monomial(&self, i: usize) -> Monomial {
    let mut m = self.unit_monomial();
    m.even[i] = 1;
    m
  }

  pub fn theta(&self, i: usize) -> GradedElement { GradedElement::from_monomial(self.theta_monomial(i)) }

  pub fn phi(&self, i: usize) -> GradedElement { GradedElement::from_monomial(self.phi_monomial(i)) }

  /// Embeds a module monomial as `1 ⊗ m`.
  pub fn lift(&self, m: &ModMono) -> Monomial {
    let mut even: Exponents = smallvec::smallvec![0; self.n];
    even.extend(m.even.iter().copied());
    Monomial { odd: m.odd << self.n, even }
  }

  pub fn lift_element(&self, terms: &[(ModMono, Scalar)]) -> GradedElement {
    terms.iter().map(|(m, c)| (self.lift(m), c.clone())).collect()
  }

  pub fn module_generator_odd(&self, a: usize) -> Monomial {
    let mut m = self.unit_monomial();
    m.odd = 1 << (self.n + a);
    m
  }

  pub fn module_generator_even(&self, a: usize) -> Monomial {
    let mut m = self.unit_monomial();
    m.even[self.n + a] = 1;
    m
  }

  pub fn theta_mask(&self, m: &Monomial) -> u64 { m.odd & low_mask(self.n) }

  pub fn phi_exponents<'a>(&self, m: &'a Monomial) -> &'a [u16] { &m.even[..self.n] }

  pub fn module_part(&self, m: &Monomial) -> ModMono {
    ModMono { odd: m.odd >> self.n, even: m.even[self.n..].iter().copied().collect() }
  }

  pub fn module_index(&self, m: &ModMono) -> Option<usize> { self.module_index.get(m).copied() }

  pub fn module_basis(&self) -> &[ModMono] { &self.module_basis }

  pub fn is_theta_free(&self, m: &Monomial) -> bool { m.odd & low_mask(self.n) == 0 }

  pub fn is_weil_unit(&self, m: &Monomial) -> bool {
    self.is_theta_free(m) && self.phi_exponents(m).iter().all(|&e| e == 0)
  }

  pub fn weil_degree(&self, m: &Monomial) -> u32 {
    (m.odd & low_mask(self.n)).count_ones() + 2 * self.phi_exponents(m).iter().map(|&e| e as u32).sum::<u32>()
  }

  pub fn degree(&self, m: &Monomial) -> u32 {
    let module_even: u32 = m.even[self.n..].iter().map(|&e| e as u32).sum();
    m.odd.count_ones() + 2 * self.phi_exponents(m).iter().map(|&e| e as u32).sum::<u32>()
      + self.layout.even_degree * module_even
  }

  pub fn module_weight(&self, m: &Monomial) -> u32 {
    (m.odd >> self.n).count_ones() + m.even[self.n..].iter().map(|&e| e as u32).sum::<u32>()
  }

  pub fn admissible(&self, m: &Monomial) -> bool {
    self.degree(m) <= self.truncation && self.layout.weight_cap.is_none_or(|cap| self.module_weight(m) <= cap)
  }

  /// Product of two monomials with its Koszul sign; `None` if it vanishes or
  /// leaves the truncation.
  pub fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Option<(Monomial, bool)> {
    let (odd, negative) = merge_odd(a.odd, b.odd)?;
    let even = a.even.iter().zip(&b.even).map(|(x, y)| x + y).collect();
    let m = Monomial { odd, even };
    self.admissible(&m).then_some((m, negative))
  }

  pub fn mul(&self, x: &GradedElement, y: &GradedElement) -> GradedElement {
    let mut out = GradedElement::zero();
    for (a, ca) in x.terms() {
      for (b, cb) in y.terms() {
        if let Some((m, negative)) = self.mul_monomials(a, b) {
          let c = ca * cb;
          out.add_term(m, if negative { -c } else { c });
        }
      }
    }
    out
  }

  /// Drops every term of total degree above `max_degree`.
  pub fn truncate(&self, x: &GradedElement, max_degree: u32) -> GradedElement {
    let mut out = x.clone();
    out.retain(|m| self.degree(m) <= max_degree);
    out
  }

  /// Splits `x` into homogeneous components, keyed by degree.
  pub fn homogeneous_parts(&self, x: &GradedElement) -> BTreeMap<u32, GradedElement> {
    let mut parts: BTreeMap<u32, GradedElement> = BTreeMap::new();
    for (m, c) in x.terms() {
      parts.entry(self.degree(m)).or_default().add_term(m.clone(), c.clone());
    }
    parts
  }

  pub fn canonical_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
    desc_lex_mask(a.odd & low_mask(self.n), b.odd & low_mask(self.n))
      .then_with(|| desc_lex_exponents(self.phi_exponents(a), self.phi_exponents(b)))
      .then_with(|| {
        let ia = self.module_index(&self.module_part(a));
        let ib = self.module_index(&self.module_part(b));
        ia.cmp(&ib)
      })
      .then_with(|| a.cmp(b))
  }

  /// Every admissible monomial of total degree `d`, in canonical order
  /// (θ part, then φ part, descending-lex; then module index).
  pub fn basis_of_degree(&self, d: u32) -> Vec<Monomial> { self.basis_filtered(d, true) }

  /// θ-free monomials of degree `d`: the basis of `S(g*) ⊗ A`.
  pub fn theta_free_basis(&self, d: u32) -> Vec<Monomial> { self.basis_filtered(d, false) }

  fn basis_filtered(&self, d: u32, with_theta: bool) -> Vec<Monomial> {
    let mut out = Vec::new();
    if d > self.truncation {
      return out;
    }
    let max_theta = if with_theta { self.n } else { 0 };
    for a in 0..=max_theta.min(d as usize) {
      for mask in subsets_of_size(self.n, a) {
        let mut b = 0u32;
        while a as u32 + 2 * b <= d {
          for phi in exponent_vectors(self.n, b) {
            let module_degree = d - a as u32 - 2 * b;
            for mm in self.layout.basis_of_degree(module_degree) {
              let mut even = phi.clone();
              even.extend(mm.even.iter().copied());
              let m = Monomial { odd: mask | (mm.odd << self.n), even };
              if self.admissible(&m) {
                out.push(m);
              }
            }
          }
          b += 1;
        }
      }
    }
    out.sort_by(|x, y| self.canonical_cmp(x, y));
    out
  }

  pub fn basis_up_to(&self, max_degree: u32) -> Vec<Monomial> {
    (0..=max_degree.min(self.truncation)).flat_map(|d| self.basis_of_degree(d)).collect()
  }

  pub fn theta_free_basis_up_to(&self, max_degree: u32) -> Vec<Monomial> {
    (0..=max_degree.min(self.truncation)).flat_map(|d| self.theta_free_basis(d)).collect()
  }

  pub fn display<'a>(&'a self, x: &'a GradedElement) -> ElementDisplay<'a> { ElementDisplay { ambient: self, x } }

  pub fn format_monomial(&self, m: &Monomial) -> String {
    let mut factors = Vec::new();
    let thetas: Vec<String> = (0..self.n).filter(|i| m.odd & (1 << i) != 0).map(|i| format!("t{}", i + 1)).collect();
    if !thetas.is_empty() {
      factors.push(thetas.join("^"));
    }
    for (i, &e) in self.phi_exponents(m).iter().enumerate() {
      match e {
        0 => {},
        1 => factors.push(format!("p{}", i + 1)),
        e => factors.push(format!("p{}^{e}", i + 1)),
      }
    }
    let module = self.module_part(m);
    if module.odd != 0 || module.even.iter().any(|&e| e != 0) {
      match self.module_index(&module) {
        Some(k) => factors.push(format!("[m:{k}]")),
        None => factors.push("[m:?]".into()),
      }
    }
    factors.join("*")
  }

  /// Parses the printing grammar: terms joined by `+`/`-`, each a `*`-product
  /// of scalars (`2/3`, `I`, `(1+2*I)`), `ti^tj…`, `pi` / `pi^e` and `[m:k]`.
  pub fn parse(&self, text: &str) -> Result<GradedElement> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
      return Err(Error::Parse("empty expression".into()));
    }
    let mut out = GradedElement::zero();
    for (negative, term) in split_terms(&s)? {
      let mut value = self.parse_term(&term)?;
      if negative {
        value = value.scale(&-Scalar::one());
      }
      out.add_assign(&value);
    }
    Ok(out)
  }

  fn parse_term(&self, term: &str) -> Result<GradedElement> {
    let mut value = self.unit();
    for factor in split_top_level(term, '*') {
      let next = self.parse_factor(&factor)?;
      value = self.mul(&value, &next);
    }
    Ok(value)
  }

  fn parse_factor(&self, factor: &str) -> Result<GradedElement> {
    let bad = || Error::Parse(format!("invalid factor `{factor}`"));
    if factor.starts_with('(') || factor == "I" || factor.chars().next().is_some_and(|c| c.is_ascii_digit()) {
      let c: Scalar = factor.parse()?;
      return Ok(self.unit().scale(&c));
    }
    if let Some(idx) = factor.strip_prefix("[m:").and_then(|r| r.strip_suffix(']')) {
      let k: usize = idx.parse().map_err(|_| bad())?;
      let mm = self.module_basis.get(k).ok_or_else(|| Error::Parse(format!("module basis index {k} out of range")))?;
      return Ok(GradedElement::from_monomial(self.lift(mm)));
    }
    if factor.starts_with('t') {
      let mut value = self.unit();
      for part in factor.split('^') {
        let i = self.parse_index(part.strip_prefix('t').ok_or_else(bad)?)?;
        value = self.mul(&value, &self.theta(i));
      }
      return Ok(value);
    }
    if let Some(rest) = factor.strip_prefix('p') {
      let (idx, exp) = match rest.split_once('^') {
        Some((i, e)) => (i, e.parse::<u32>().map_err(|_| bad())?),
        None => (rest, 1),
      };
      let i = self.parse_index(idx)?;
      let mut value = self.unit();
      for _ in 0..exp {
        value = self.mul(&value, &self.phi(i));
      }
      return Ok(value);
    }
    Err(bad())
  }

  fn parse_index(&self, text: &str) -> Result<usize> {
    let i: usize = text.parse().map_err(|_| Error::Parse(format!("invalid generator index `{text}`")))?;
    if i == 0 || i > self.n {
      return Err(Error::Parse(format!("generator index {i} out of range 1..={}", self.n)));
    }
    Ok(i - 1)
  }
}

fn low_mask(n: usize) -> u64 { if n >= 64 { u64::MAX } else { (1u64 << n) - 1 } }

fn split_top_level(s: &str, sep: char) -> Vec<String> {
  let mut out = Vec::new();
  let mut depth = 0i32;
  let mut cur = String::new();
  for ch in s.chars() {
    match ch {
      '(' | '[' => depth += 1,
      ')' | ']' => depth -= 1,
      _ => {},
    }
    if ch == sep && depth == 0 {
      out.push(std::mem::take(&mut cur));
    } else {
      cur.push(ch);
    }
  }
  out.push(cur);
  out
}

fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
  let mut out = Vec::new();
  let mut depth = 0i32;
  let mut cur = String::new();
  let mut negative = false;
  let mut prev: Option<char> = None;
  for ch in s.chars() {
    match ch {
      '(' | '[' => depth += 1,
      ')' | ']' => depth -= 1,
      _ => {},
    }
    // A sign right after `^` or `*` belongs to the factor, not a new term.
    let separator = (ch == '+' || ch == '-') && depth == 0 && !matches!(prev, Some('^') | Some('*'));
    if separator {
      if !cur.is_empty() {
        out.push((negative, std::mem::take(&mut cur)));
        negative = false;
      }
      if ch == '-' {
        negative = !negative;
      }
    } else {
      cur.push(ch);
    }
    prev = Some(ch);
  }
  if depth != 0 {
    return Err(Error::Parse(format!("unbalanced brackets in `{s}`")));
  }
  if cur.is_empty() {
    return Err(Error::Parse(format!("trailing sign in `{s}`")));
  }
  out.push((negative, cur));
  Ok(out)
}

pub struct ElementDisplay<'a> {
  ambient: &'a Ambient,
  x: &'a GradedElement,
}

impl fmt::Display for ElementDisplay<'_> {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if self.x.is_zero() {
      return write!(f, "0");
    }
    let mut terms: Vec<_> = self.x.terms().collect();
    terms.sort_by(|a, b| self.ambient.canonical_cmp(a.0, b.0));
    for (idx, (m, c)) in terms.into_iter().enumerate() {
      let negative = if c.is_real() { c.re < num_rational::BigRational::zero() } else { c.re.is_zero() && c.im < num_rational::BigRational::zero() };
      let c = if negative { -c } else { c.clone() };
      match (idx, negative) {
        (0, true) => write!(f, "-")?,
        (0, false) => {},
        (_, true) => write!(f, " - ")?,
        (_, false) => write!(f, " + ")?,
      }
      let body = self.ambient.format_monomial(m);
      let coef = if c.is_compound() { format!("({c})") } else { c.to_string() };
      match (body.is_empty(), c.is_one()) {
        (true, _) => write!(f, "{coef}")?,
        (false, true) => write!(f, "{body}")?,
        (false, false) => write!(f, "{coef}*{body}")?,
      }
    }
    Ok(())
  }
}
