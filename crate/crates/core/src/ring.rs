//! The standard graded polynomial ring R = K[x_1..x_n], its partner ring
//! B = K[y_1..y_n], and the apolarity action of R on B by partial
//! differentiation: `x_i` acts on B as d/dy_i.
//!
//! Graded pieces are always expressed in the lex-descending monomial
//! basis; every matrix in the crate is written in these bases, so there
//! is exactly one basis convention to get wrong.

use crate::fp::{FpMatrix, PrimeField};
use crate::{Error, Result};
use std::fmt;

/// Binomial coefficient, exact; panics on overflow (desk-scale inputs stay
/// far below that).
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    usize::try_from(acc).expect("binomial overflow")
}

/// Dimension of the degree-d piece of a polynomial ring in n variables.
pub fn poly_dim(n: usize, d: usize) -> usize {
    if n == 0 {
        return usize::from(d == 0);
    }
    binomial(n + d - 1, d)
}

/// Exponent vector of a monomial in a fixed number of variables.
///
/// `Ord` is the plain lexicographic order on exponent vectors; bases are
/// stored lex-descending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn variable(n: usize, i: usize) -> Self {
        assert!(i < n);
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps }
    }

    #[inline]
    pub fn n_vars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `self / other`; caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Pads the exponent vector with zeros for new trailing variables.
    pub fn extend_vars(&self, n: usize) -> Monomial {
        assert!(n >= self.n_vars());
        let mut exps = self.exps.clone();
        exps.resize(n, 0);
        Monomial { exps }
    }

    /// Prepends `k` new variables with exponent zero.
    pub fn prepend_vars(&self, k: usize) -> Monomial {
        let mut exps = vec![0; k];
        exps.extend_from_slice(&self.exps);
        Monomial { exps }
    }

    pub fn format_with(&self, letter: char) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| format!("{letter}{}^{e}", i + 1))
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with('x'))
    }
}

/// The lex-descending monomial basis of the degree-d piece of a polynomial
/// ring in n variables. Deterministic; size `poly_dim(n, d)`.
pub fn monomial_basis(n: usize, d: usize) -> Vec<Monomial> {
    assert!(n >= 1, "monomial_basis needs at least one variable");
    let mut out = Vec::with_capacity(poly_dim(n, d));
    let mut current = vec![0u32; n];
    fill_basis(&mut out, &mut current, 0, d);
    out
}

fn fill_basis(out: &mut Vec<Monomial>, current: &mut Vec<u32>, var: usize, remaining: usize) {
    let n = current.len();
    if var == n - 1 {
        current[var] = remaining as u32;
        out.push(Monomial::new(current.clone()));
        current[var] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current[var] = e as u32;
        fill_basis(out, current, var + 1, remaining - e);
    }
    current[var] = 0;
}

/// Index of a monomial inside `monomial_basis(n, d)`, computed
/// combinatorially (number of lex-larger monomials of the same degree).
pub fn monomial_rank(m: &Monomial) -> usize {
    let n = m.n_vars();
    let d = m.degree();
    let mut rank = 0usize;
    let mut rem = d;
    for i in 0..n.saturating_sub(1) {
        let e = m.exp(i) as usize;
        for larger in (e + 1)..=rem {
            rank += poly_dim(n - i - 1, rem - larger);
        }
        rem -= e;
    }
    rank
}

/// Which set of variables a form lives in: `X` forms act as differential
/// operators on `Y` forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn letter(self) -> char {
        match self {
            Side::X => 'x',
            Side::Y => 'y',
        }
    }
}

/// A homogeneous polynomial of fixed degree, stored as its coefficient
/// vector over the lex-descending monomial basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form {
    n: usize,
    degree: usize,
    side: Side,
    field: PrimeField,
    coeffs: Vec<u32>,
}

impl Form {
    pub fn zero(field: PrimeField, n: usize, degree: usize, side: Side) -> Self {
        Form {
            n,
            degree,
            side,
            field,
            coeffs: vec![0; poly_dim(n, degree)],
        }
    }

    pub fn from_coeffs(
        field: PrimeField,
        n: usize,
        degree: usize,
        side: Side,
        coeffs: Vec<u32>,
    ) -> Result<Self> {
        if coeffs.len() != poly_dim(n, degree) {
            return Err(Error::Input(format!(
                "coefficient vector has length {}, expected {} for degree {} in {} variables",
                coeffs.len(),
                poly_dim(n, degree),
                degree,
                n
            )));
        }
        if coeffs.iter().any(|&c| c >= field.modulus()) {
            return Err(Error::Input("coefficient not reduced mod p".into()));
        }
        Ok(Form {
            n,
            degree,
            side,
            field,
            coeffs,
        })
    }

    pub fn monomial(field: PrimeField, m: &Monomial, side: Side) -> Self {
        let mut f = Form::zero(field, m.n_vars(), m.degree(), side);
        f.coeffs[monomial_rank(m)] = 1;
        f
    }

    pub fn from_terms(
        field: PrimeField,
        n: usize,
        degree: usize,
        side: Side,
        terms: &[(Monomial, i64)],
    ) -> Result<Self> {
        let mut form = Form::zero(field, n, degree, side);
        for (m, c) in terms {
            if m.n_vars() != n || m.degree() != degree {
                return Err(Error::Input(format!(
                    "term {m} does not have degree {degree} in {n} variables"
                )));
            }
            let idx = monomial_rank(m);
            form.coeffs[idx] = field.add(form.coeffs[idx], field.reduce_i64(*c));
        }
        Ok(form)
    }

    #[inline]
    pub fn n_vars(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn side(&self) -> Side {
        self.side
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff_of(&self, m: &Monomial) -> u32 {
        assert_eq!(m.degree(), self.degree);
        self.coeffs[monomial_rank(m)]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn terms(&self) -> Vec<(Monomial, u32)> {
        monomial_basis(self.n, self.degree)
            .into_iter()
            .zip(self.coeffs.iter())
            .filter(|(_, &c)| c != 0)
            .map(|(m, &c)| (m, c))
            .collect()
    }

    pub fn scale(&self, c: u32) -> Form {
        let mut out = self.clone();
        for x in out.coeffs.iter_mut() {
            *x = self.field.mul(*x, c);
        }
        out
    }

    pub fn add(&self, other: &Form) -> Result<Form> {
        if self.n != other.n || self.degree != other.degree || self.side != other.side {
            return Err(Error::Input("cannot add forms of different shapes".into()));
        }
        let mut out = self.clone();
        for (x, &y) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *x = self.field.add(*x, y);
        }
        Ok(out)
    }

    /// Product of two forms on the same side.
    pub fn mul_form(&self, other: &Form) -> Result<Form> {
        if self.n != other.n || self.side != other.side {
            return Err(Error::Input("cannot multiply forms of different shapes".into()));
        }
        let f = self.field;
        let mut out = Form::zero(f, self.n, self.degree + other.degree, self.side);
        let basis_a = monomial_basis(self.n, self.degree);
        let basis_b = monomial_basis(self.n, other.degree);
        for (ia, ma) in basis_a.iter().enumerate() {
            let ca = self.coeffs[ia];
            if ca == 0 {
                continue;
            }
            for (ib, mb) in basis_b.iter().enumerate() {
                let cb = other.coeffs[ib];
                if cb == 0 {
                    continue;
                }
                let idx = monomial_rank(&ma.mul(mb));
                out.coeffs[idx] = f.add(out.coeffs[idx], f.mul(ca, cb));
            }
        }
        Ok(out)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Form {
        assert_eq!(m.n_vars(), self.n);
        let mut out = Form::zero(self.field, self.n, self.degree + m.degree(), self.side);
        for (idx, mono) in monomial_basis(self.n, self.degree).iter().enumerate() {
            if self.coeffs[idx] != 0 {
                out.coeffs[monomial_rank(&mono.mul(m))] = self.coeffs[idx];
            }
        }
        out
    }

    /// Pads the form with extra trailing variables of exponent zero.
    pub fn extend_vars(&self, n: usize) -> Form {
        assert!(n >= self.n);
        let mut out = Form::zero(self.field, n, self.degree, self.side);
        for (m, c) in self.terms() {
            out.coeffs[monomial_rank(&m.extend_vars(n))] = c;
        }
        out
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let letter = self.side.letter();
        let rendered: Vec<String> = terms
            .iter()
            .map(|(m, c)| {
                if m.is_one() {
                    format!("{c}")
                } else {
                    format!("{c}*{}", m.format_with(letter))
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

/// Action of the monomial operator `m` (in the x-variables) on the
/// monomial `target` (in the y-variables): iterated partial derivative.
/// Returns the falling-factorial coefficient and the quotient monomial,
/// or `None` when the derivative vanishes identically.
fn differentiate_monomial(
    field: PrimeField,
    m: &Monomial,
    target: &Monomial,
) -> Option<(u32, Monomial)> {
    if !m.divides(target) {
        return None;
    }
    let mut coeff = 1u32;
    for i in 0..m.n_vars() {
        let a = m.exp(i);
        let b = target.exp(i);
        for k in 0..a {
            coeff = field.mul(coeff, (b - k) % field.modulus());
        }
    }
    Some((coeff, target.div(m)))
}

/// The apolarity contraction `g . f`: `g` (x-side, degree e) acts on `f`
/// (y-side, degree s) as a differential operator. The result has degree
/// `s - e`; when `e > s` the action is identically zero and the zero form
/// of degree 0 is returned.
///
/// Faithfulness of the differentiation action requires `p > s`, which the
/// algebra constructors enforce.
pub fn contract(g: &Form, f: &Form) -> Result<Form> {
    if g.n_vars() != f.n_vars() {
        return Err(Error::Input(format!(
            "contract: operator has {} variables, form has {}",
            g.n_vars(),
            f.n_vars()
        )));
    }
    if g.side() != Side::X || f.side() != Side::Y {
        return Err(Error::Input(
            "contract: operator must be an x-form and the target a y-form".into(),
        ));
    }
    let field = f.field();
    let (e, s) = (g.degree(), f.degree());
    if e > s {
        return Ok(Form::zero(field, f.n_vars(), 0, Side::Y));
    }
    let mut out = Form::zero(field, f.n_vars(), s - e, Side::Y);
    for (gm, gc) in g.terms() {
        for (fm, fc) in f.terms() {
            if let Some((dc, q)) = differentiate_monomial(field, &gm, &fm) {
                if dc != 0 {
                    let idx = monomial_rank(&q);
                    let c = field.mul(field.mul(gc, fc), dc);
                    out.coeffs[idx] = field.add(out.coeffs[idx], c);
                }
            }
        }
    }
    Ok(out)
}

/// A linear map between graded pieces, in the lex-descending bases.
#[derive(Debug, Clone)]
pub struct GradedPieceMap {
    pub source_degree: usize,
    pub target_degree: usize,
    pub matrix: FpMatrix,
}

impl GradedPieceMap {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// Matrix of the contraction map R_e -> B_{s-e}, G |-> G . F. One column
/// per monomial of R_e; the kernel of this matrix is the degree-e piece
/// of the annihilator of F.
pub fn catalecticant_matrix(f: &Form, e: usize) -> Result<GradedPieceMap> {
    if f.side() != Side::Y {
        return Err(Error::Input("catalecticant: F must be a y-form".into()));
    }
    let s = f.degree();
    if e > s {
        return Err(Error::Input(format!(
            "catalecticant: differentiation order {e} exceeds degree {s}"
        )));
    }
    let n = f.n_vars();
    let field = f.field();
    let src = monomial_basis(n, e);
    let rows = poly_dim(n, s - e);
    let mut matrix = FpMatrix::zero(field, rows, src.len());
    for (col, m) in src.iter().enumerate() {
        for (fm, fc) in f.terms() {
            if let Some((dc, q)) = differentiate_monomial(field, m, &fm) {
                let c = field.mul(fc, dc);
                if c != 0 {
                    let r = monomial_rank(&q);
                    matrix.set(r, col, field.add(matrix.get(r, col), c));
                }
            }
        }
    }
    Ok(GradedPieceMap {
        source_degree: e,
        target_degree: s - e,
        matrix,
    })
}

/// Matrix of the multiplication map V (x) R_e -> R_{d+e} for a list of
/// degree-d forms V. Columns are ordered (form index, then basis monomial
/// of R_e); the column count is `V.len() * poly_dim(n, e)`. The image is
/// the degree-(d+e) piece of the ideal generated by V in degrees <= d+e
/// when V spans an ideal piece.
pub fn multiplication_map(v: &[Form], e: usize) -> Result<GradedPieceMap> {
    if v.is_empty() {
        return Err(Error::Input(
            "multiplication_map: empty form list has no ambient ring".into(),
        ));
    }
    let n = v[0].n_vars();
    let d = v[0].degree();
    let field = v[0].field();
    if v.iter().any(|f| f.n_vars() != n || f.degree() != d) {
        return Err(Error::Input(
            "multiplication_map: forms must share degree and variable count".into(),
        ));
    }
    let mons = monomial_basis(n, e);
    let rows = poly_dim(n, d + e);
    let mut matrix = FpMatrix::zero(field, rows, v.len() * mons.len());
    for (fi, form) in v.iter().enumerate() {
        for (mi, m) in mons.iter().enumerate() {
            let col = fi * mons.len() + mi;
            let prod = form.mul_monomial(m);
            for (r, &c) in prod.coeffs().iter().enumerate() {
                if c != 0 {
                    matrix.set(r, col, c);
                }
            }
        }
    }
    Ok(GradedPieceMap {
        source_degree: e,
        target_degree: d + e,
        matrix,
    })
}

/// Parses a form from the text syntax `c*x1^a1*...*xn^an + ...`.
///
/// Coefficients are decimal integers reduced mod p on read; the variable
/// letter (`x` or `y`) fixes the side and may not be mixed. A bare
/// variable product without a leading coefficient means coefficient 1,
/// and `^1` may be omitted. All terms must have the same total degree.
pub fn parse_form(input: &str, n: usize, field: PrimeField) -> Result<Form> {
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Input("empty form".into()));
    }
    let mut terms: Vec<(i64, Monomial)> = Vec::new();
    let mut side: Option<Side> = None;
    let mut rest = compact.as_str();
    let mut sign = 1i64;
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r;
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r;
    }
    while !rest.is_empty() {
        let end = rest
            .char_indices()
            .find(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        let term_str = &rest[..end];
        let (coeff, mono, term_side) = parse_term(term_str, n)?;
        if let Some(ts) = term_side {
            match side {
                None => side = Some(ts),
                Some(s) if s != ts => {
                    return Err(Error::Input("form mixes x and y variables".into()))
                }
                _ => {}
            }
        }
        terms.push((sign * coeff, mono));
        if end == rest.len() {
            break;
        }
        sign = if rest.as_bytes()[end] == b'-' { -1 } else { 1 };
        rest = &rest[end + 1..];
    }
    let degree = terms
        .first()
        .map(|(_, m)| m.degree())
        .ok_or_else(|| Error::Input("empty form".into()))?;
    if terms.iter().any(|(_, m)| m.degree() != degree) {
        return Err(Error::Input("form is not homogeneous".into()));
    }
    let side = side.unwrap_or(Side::X);
    let term_list: Vec<(Monomial, i64)> = terms.into_iter().map(|(c, m)| (m, c)).collect();
    Form::from_terms(field, n, degree, side, &term_list)
}

fn parse_term(term: &str, n: usize) -> Result<(i64, Monomial, Option<Side>)> {
    let mut coeff = 1i64;
    let mut seen_coeff = false;
    let mut exps = vec![0u32; n];
    let mut side = None;
    for factor in term.split('*') {
        if factor.is_empty() {
            return Err(Error::Input(format!("empty factor in term '{term}'")));
        }
        let first = factor.chars().next().unwrap();
        if first.is_ascii_digit() {
            if seen_coeff {
                return Err(Error::Input(format!(
                    "term '{term}' has two numeric factors"
                )));
            }
            coeff = factor
                .parse::<i64>()
                .map_err(|_| Error::Input(format!("bad coefficient '{factor}'")))?;
            seen_coeff = true;
        } else if first == 'x' || first == 'y' {
            let this_side = if first == 'x' { Side::X } else { Side::Y };
            match side {
                None => side = Some(this_side),
                Some(s) if s != this_side => {
                    return Err(Error::Input("term mixes x and y variables".into()))
                }
                _ => {}
            }
            let body = &factor[1..];
            let (var_str, exp_str) = match body.split_once('^') {
                Some((v, e)) => (v, e),
                None => (body, "1"),
            };
            let var: usize = var_str
                .parse()
                .map_err(|_| Error::Input(format!("bad variable '{factor}'")))?;
            if var < 1 || var > n {
                return Err(Error::Input(format!(
                    "variable index {var} out of range 1..={n}"
                )));
            }
            let exp: u32 = exp_str
                .parse()
                .map_err(|_| Error::Input(format!("bad exponent in '{factor}'")))?;
            exps[var - 1] += exp;
        } else {
            return Err(Error::Input(format!("unrecognized factor '{factor}'")));
        }
    }
    Ok((coeff, Monomial::new(exps), side))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f101() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(monomial_basis(1, 5).len(), 1);
        assert_eq!(monomial_basis(4, 2).len(), 10);
        assert_eq!(monomial_basis(3, 0).len(), 1);
        for n in 1..=6 {
            for d in 0..=12 {
                assert_eq!(monomial_basis(n, d).len(), binomial(n + d - 1, d));
            }
        }
    }

    #[test]
    fn basis_is_lex_descending_and_rank_matches() {
        for n in 1..=4 {
            for d in 0..=5 {
                let basis = monomial_basis(n, d);
                for w in basis.windows(2) {
                    assert!(w[0] > w[1]);
                }
                for (i, m) in basis.iter().enumerate() {
                    assert_eq!(monomial_rank(m), i, "rank mismatch for {m}");
                }
            }
        }
    }

    #[test]
    fn contract_single_derivative() {
        let f = f101();
        // x1 . y1^3 = 3 y1^2
        let g = Form::monomial(f, &Monomial::variable(2, 0), Side::X);
        let target = Form::monomial(f, &Monomial::new(vec![3, 0]), Side::Y);
        let result = contract(&g, &target).unwrap();
        assert_eq!(result.coeff_of(&Monomial::new(vec![2, 0])), 3);
        assert_eq!(result.terms().len(), 1);
    }

    #[test]
    fn contract_absent_variable_kills() {
        let f = f101();
        let g = Form::monomial(f, &Monomial::variable(2, 1), Side::X);
        let target = Form::monomial(f, &Monomial::new(vec![2, 0]), Side::Y);
        assert!(contract(&g, &target).unwrap().is_zero());
    }

    #[test]
    fn contract_to_degree_zero() {
        let f = f101();
        // x1^2 . (y1 y2) = 0 as a degree-0 form
        let g = Form::monomial(f, &Monomial::new(vec![2, 0]), Side::X);
        let target = Form::monomial(f, &Monomial::new(vec![1, 1]), Side::Y);
        let result = contract(&g, &target).unwrap();
        assert_eq!(result.degree(), 0);
        assert!(result.is_zero());
    }

    #[test]
    fn catalecticant_of_square() {
        let f = f101();
        // F = y1^2, n = 2, e = 1: columns x1.F = 2y1, x2.F = 0
        let form = Form::monomial(f, &Monomial::new(vec![2, 0]), Side::Y);
        let cat = catalecticant_matrix(&form, 1).unwrap();
        assert_eq!(cat.matrix.rows(), 2);
        assert_eq!(cat.matrix.cols(), 2);
        assert_eq!(cat.matrix.get(0, 0), 2);
        assert_eq!(cat.matrix.get(1, 0), 0);
        assert_eq!(cat.matrix.column(1), vec![0, 0]);
        assert_eq!(cat.rank(), 1);
    }

    #[test]
    fn catalecticant_of_zero_form() {
        let f = f101();
        let zero = Form::zero(f, 3, 4, Side::Y);
        let cat = catalecticant_matrix(&zero, 2).unwrap();
        assert!(cat.matrix.is_zero());
    }

    #[test]
    fn catalecticant_top_degree() {
        let f = f101();
        // F = y1 y2, e = 2: columns for x1^2, x1x2, x2^2 are 0, 1, 0
        let form = Form::monomial(f, &Monomial::new(vec![1, 1]), Side::Y);
        let cat = catalecticant_matrix(&form, 2).unwrap();
        assert_eq!(cat.matrix.rows(), 1);
        assert_eq!(cat.matrix.row(0), &[0, 1, 0]);
        assert_eq!(cat.rank(), 1);
    }

    #[test]
    fn multiplication_map_examples() {
        let f = f101();
        // V = {x1}, e = 1, n = 2: image spans {x1^2, x1x2}
        let v = vec![Form::monomial(f, &Monomial::variable(2, 0), Side::X)];
        let map = multiplication_map(&v, 1).unwrap();
        assert_eq!(map.rank(), 2);

        // V = {x1^2, x1x2}, e = 1: image spans {x1^3, x1^2 x2, x1 x2^2}
        let v = vec![
            Form::monomial(f, &Monomial::new(vec![2, 0]), Side::X),
            Form::monomial(f, &Monomial::new(vec![1, 1]), Side::X),
        ];
        let map = multiplication_map(&v, 1).unwrap();
        assert_eq!(map.rank(), 3);

        assert!(multiplication_map(&[], 1).is_err());
    }

    #[test]
    fn parse_and_format_roundtrip() {
        let f = f101();
        let form = parse_form("3*x1^2*x2^1 + 100*x3^3 - 4*x1^1*x2^1*x3^1", 3, f).unwrap();
        assert_eq!(form.degree(), 3);
        assert_eq!(form.side(), Side::X);
        assert_eq!(form.coeff_of(&Monomial::new(vec![2, 1, 0])), 3);
        assert_eq!(form.coeff_of(&Monomial::new(vec![0, 0, 3])), 100);
        assert_eq!(form.coeff_of(&Monomial::new(vec![1, 1, 1])), 97);
        let reparsed = parse_form(&form.to_string(), 3, f).unwrap();
        assert_eq!(form, reparsed);
    }

    #[test]
    fn parse_rejects_garbage() {
        let f = f101();
        assert!(parse_form("", 2, f).is_err());
        assert!(parse_form("x1 + x2^2", 2, f).is_err()); // inhomogeneous
        assert!(parse_form("x1*y1", 2, f).is_err()); // mixed sides
        assert!(parse_form("x3^2", 2, f).is_err()); // out of range
    }

    fn arb_form(n: usize, d: usize, side: Side) -> impl Strategy<Value = Form> {
        proptest::collection::vec(0u32..101, poly_dim(n, d)).prop_map(move |coeffs| {
            Form::from_coeffs(PrimeField::new(101).unwrap(), n, d, side, coeffs).unwrap()
        })
    }

    proptest! {
        // contract(G*H, F) = contract(G, contract(H, F))
        #[test]
        fn contraction_is_multiplicative(
            g in arb_form(3, 1, Side::X),
            h in arb_form(3, 2, Side::X),
            f in arb_form(3, 4, Side::Y),
        ) {
            let gh = g.mul_form(&h).unwrap();
            let lhs = contract(&gh, &f).unwrap();
            let rhs = contract(&g, &contract(&h, &f).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        // rank of the catalecticant in complementary degrees agrees
        #[test]
        fn catalecticant_rank_symmetry(f in arb_form(3, 5, Side::Y)) {
            for e in 0..=5usize {
                let a = catalecticant_matrix(&f, e).unwrap().rank();
                let b = catalecticant_matrix(&f, 5 - e).unwrap().rank();
                prop_assert_eq!(a, b);
            }
        }

        #[test]
        fn contract_is_bilinear(
            g1 in arb_form(2, 2, Side::X),
            g2 in arb_form(2, 2, Side::X),
            f in arb_form(2, 4, Side::Y),
        ) {
            let sum = g1.add(&g2).unwrap();
            let lhs = contract(&sum, &f).unwrap();
            let rhs = contract(&g1, &f).unwrap().add(&contract(&g2, &f).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
