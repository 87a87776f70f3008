use super::{GroebnerBasis, Monomial};

/// Hilbert series of `S/I` for a monomial ideal `I` (or of `S/J` with
/// `in(J) = I`), stored as its numerator over `(1 - t)^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    nvars: usize,
    /// K-polynomial coefficients, index = degree.
    numerator: Vec<i64>,
}

impl HilbertSeries {
    pub fn of_monomial_ideal(nvars: usize, gens: &[Monomial]) -> HilbertSeries {
        let mut numerator = kpoly(minimalize(gens.to_vec()));
        trim(&mut numerator);
        HilbertSeries { nvars, numerator }
    }

    /// Uses the leading monomials; valid for a graded ideal under a degree
    /// compatible order.
    pub fn of_basis(gb: &GroebnerBasis) -> HilbertSeries {
        HilbertSeries::of_monomial_ideal(gb.ring().nvars(), &gb.leading_monomials())
    }

    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    /// `(h, d)` with `K(t) = (1 - t)^(N - d) * h(t)` and `h(1) != 0`.
    pub fn reduced(&self) -> (Vec<i64>, usize) {
        let mut h = self.numerator.clone();
        let mut c = 0;
        while !h.is_empty() && h.iter().sum::<i64>() == 0 {
            h = divide_one_minus_t(&h);
            c += 1;
        }
        (h, self.nvars - c)
    }

    pub fn dimension(&self) -> usize {
        if self.numerator.is_empty() {
            return 0;
        }
        self.reduced().1
    }

    /// Degree (multiplicity) `e(S/I) = h(1)`.
    pub fn multiplicity(&self) -> i64 {
        self.reduced().0.iter().sum()
    }

    /// `dim_K (S/I)_d`.
    pub fn hilbert_function(&self, d: usize) -> i64 {
        // coefficient of t^d in K(t) / (1 - t)^N
        let n = self.nvars as i64;
        self.numerator
            .iter()
            .enumerate()
            .take(d + 1)
            .map(|(k, &c)| c * binom(n - 1 + (d - k) as i64, n - 1))
            .sum()
    }
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return if k == -1 && n == -1 { 1 } else { 0 };
    }
    let k = k.min(n - k);
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r as i64
}

fn trim(p: &mut Vec<i64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn divide_one_minus_t(p: &[i64]) -> Vec<i64> {
    // p = (1 - t) q  =>  q_k = p_0 + ... + p_k
    let mut q = Vec::with_capacity(p.len());
    let mut acc = 0;
    for &c in &p[..p.len() - 1] {
        acc += c;
        q.push(acc);
    }
    trim(&mut q);
    q
}

fn add_into(acc: &mut Vec<i64>, p: &[i64], shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (k, &c) in p.iter().enumerate() {
        acc[k + shift] += c;
    }
}

fn times_one_minus_t_pow(p: &[i64], d: usize) -> Vec<i64> {
    let mut out = p.to_vec();
    out.push(0);
    out.resize(p.len() + d, 0);
    for k in (d..out.len()).rev() {
        out[k] -= out[k - d];
    }
    out
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// K-polynomial of `S/I` for minimal generators `gens`, by pivoting on the
/// most frequent variable: `K(I) = K(I + x) + t K(I : x)`.
fn kpoly(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![];
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        return gens
            .iter()
            .fold(vec![1], |acc, g| times_one_minus_t_pow(&acc, g.degree() as usize));
    }
    let n = gens[0].nvars();
    let mut count = vec![0usize; n];
    for g in &gens {
        for (i, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                count[i] += 1;
            }
        }
    }
    let x = (0..n).max_by_key(|&i| (count[i], std::cmp::Reverse(i))).unwrap();
    let xm = Monomial::var(n, x);

    // I + x = x + (generators free of x)
    let free: Vec<Monomial> = gens.iter().filter(|g| g.exponents()[x] == 0).cloned().collect();
    let plus = times_one_minus_t_pow(&kpoly(free), 1);

    // I : x
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| if g.exponents()[x] > 0 { xm.quotient_of(g) } else { g.clone() })
        .collect();
    let colon = kpoly(minimalize(colon));

    let mut out = plus;
    add_into(&mut out, &colon, 1);
    trim(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    /// Counts standard monomials of degree `d` by enumeration.
    fn brute_hf(n: usize, gens: &[Monomial], d: usize) -> i64 {
        fn rec(n: usize, i: usize, left: u16, cur: &mut Vec<u16>, gens: &[Monomial], count: &mut i64) {
            if i == n - 1 {
                cur.push(left);
                let mono = Monomial::from_exponents(cur.clone());
                if !gens.iter().any(|g| g.divides(&mono)) {
                    *count += 1;
                }
                cur.pop();
                return;
            }
            for e in 0..=left {
                cur.push(e);
                rec(n, i + 1, left - e, cur, gens, count);
                cur.pop();
            }
        }
        let mut count = 0;
        rec(n, 0, d as u16, &mut Vec::new(), gens, &mut count);
        count
    }

    #[test]
    fn complete_intersection_and_cusp() {
        // <xy, zw>: two quadrics in 4 variables
        let h = HilbertSeries::of_monomial_ideal(4, &[m(&[1, 1, 0, 0]), m(&[0, 0, 1, 1])]);
        assert_eq!(h.numerator(), &[1, 0, -2, 0, 1]);
        assert_eq!(h.dimension(), 2);
        assert_eq!(h.multiplicity(), 4);
        // <x^2, xy> has an embedded component; dim 1 (the y-axis), degree 1
        let h = HilbertSeries::of_monomial_ideal(2, &[m(&[2, 0]), m(&[1, 1])]);
        assert_eq!(h.dimension(), 1);
        assert_eq!(h.multiplicity(), 1);
        assert_eq!(h.hilbert_function(5), 1);
    }

    #[test]
    fn artinian_quotient() {
        let h = HilbertSeries::of_monomial_ideal(2, &[m(&[2, 0]), m(&[0, 3])]);
        assert_eq!(h.dimension(), 0);
        assert_eq!(h.multiplicity(), 6);
        let h = HilbertSeries::of_monomial_ideal(3, &[]);
        assert_eq!(h.dimension(), 3);
        assert_eq!(h.hilbert_function(2), 6);
    }

    proptest! {
        #[test]
        fn hilbert_function_matches_enumeration(
            gens in proptest::collection::vec(proptest::collection::vec(0u16..3, 4), 1..6),
            d in 0usize..6,
        ) {
            let gens: Vec<Monomial> = gens.into_iter().map(Monomial::from_exponents).collect();
            let h = HilbertSeries::of_monomial_ideal(4, &gens);
            prop_assert_eq!(h.hilbert_function(d), brute_hf(4, &gens, d));
        }
    }
}
