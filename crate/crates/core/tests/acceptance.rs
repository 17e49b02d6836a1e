//! Acceptance criteria 1-8. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use ftri::coxeter::{monomials_of_rank, CoxMonomial, CoxSum, IrreducibleType, IrreducibleType::*};
use ftri::exactmath::{
    int, rat, resultant, root_count, sylvester_resultant, BiPoly, Endpoints, IsolatedRoot, Rational, SturmChain,
    UniPoly, Var,
};
use ftri::ftriangle::{
    a_decompose, dihedral_poly, f_chapoton, f_irreducible, f_of, f_virtual, from_a_part, tables, translate_closure,
    FTriangle, Provenance,
};
use ftri::regions::{
    barycentric_p4, check_71, check_72, classify_p3, quadratic_a, quadratic_b, rank4_coords, skew_growth_check,
    P3Point, P3Region, Rank4Coords,
};
use ftri::zerolocus::{count_roots_at, default_grid, verify_a3, verify_a4, verify_all, VerifyOptions};
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::time::Instant;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const GRID: u32 = 256;

fn irr(t: IrreducibleType) -> FTriangle {
    f_irreducible(t).unwrap()
}

fn mono(ts: &[IrreducibleType]) -> FTriangle {
    f_of(&CoxSum::monomial(CoxMonomial::from_factors(ts.to_vec()))).unwrap()
}

fn tabulated_types() -> Vec<IrreducibleType> {
    vec![A(1), A(2), B(2), I2(5), I2(6), A(3), B(3), H3, A(4), B(4), D(4), F4, H4]
}

/// Every monomial of rank 1..=4 in the tabulated types.
fn all_monomials() -> Vec<CoxMonomial> {
    (1..=4).flat_map(|l| monomials_of_rank(&tabulated_types(), l)).collect()
}

fn random_rat(rng: &mut StdRng, num: i64, den: i64) -> Rational {
    rat(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

fn random_nonzero(rng: &mut StdRng, num: i64, den: i64) -> Rational {
    loop {
        let q = random_rat(rng, num, den);
        if !q.is_zero() {
            return q;
        }
    }
}

fn random_pos(rng: &mut StdRng, num: i64, den: i64) -> Rational {
    rat(rng.gen_range(0..=num), rng.gen_range(1..=den))
}

fn c1_tables() -> Outcome {
    let mut rows = 0;
    for p in 2..=12 {
        let expanded = BiPoly::from_int_terms(&[(0, 0, 1), (0, 1, -2), (1, 0, -p), (0, 2, 1), (1, 1, 2), (2, 0, p - 1)]);
        let rebuilt = from_a_part(&BiPoly::constant(int(p - 1)), 2, &int(1), Provenance::Expr("I2".into()));
        ensure!(rebuilt.poly() == &expanded, "I2({p}) A-part line");
        ensure!(dihedral_poly(&int(p)) == expanded, "I2({p}) expanded line");
        rows += 1;
    }
    for row in tables::IRREDUCIBLE_ROWS.iter().chain(tables::PRODUCT_ROWS.iter()) {
        let expanded = BiPoly::from_int_terms(row.expanded);
        let rebuilt = from_a_part(&BiPoly::from_int_terms(row.a_part), row.rank, &int(1), Provenance::Expr(row.name.into()));
        ensure!(rebuilt.poly() == &expanded, "{}: A-part line does not expand to the polynomial line", row.name);
        rows += 1;
    }
    for p in 2..=9 {
        let expanded = BiPoly::from_int_terms(&[
            (0, 0, 1), (1, 0, -(1 + p)), (2, 0, 2 * p - 1), (3, 0, -(p - 1)), (0, 1, -3), (1, 1, 4 + p),
            (2, 1, -(p + 1)), (0, 2, 3), (1, 2, -3), (0, 3, -1),
        ]);
        let a = BiPoly::from_int_terms(&[(0, 0, p), (1, 0, -(p - 1)), (0, 1, -(p + 1))]);
        ensure!(from_a_part(&a, 3, &int(1), Provenance::Expr("A1I2".into())).poly() == &expanded, "A1I2({p}) A-part line");
        ensure!(BiPoly::from_int_terms(&[(0, 0, 1), (1, 0, -1), (0, 1, -1)]) * dihedral_poly(&int(p)) == expanded, "A1I2({p}) product");
        rows += 1;
    }
    for h in [rat(1, 1), int(2), rat(7, 3), int(11), int(22)] {
        let d = &h + int(2);
        let expanded = BiPoly::from_terms([
            ((0, 0), int(1)),
            ((1, 0), int(-3) * &h / int(2)),
            ((2, 0), int(3) * &h * (int(3) * &h - int(2)) / (int(2) * &d)),
            ((3, 0), -(&h - int(1)) * (int(3) * &h - int(2)) / &d),
            ((0, 1), int(-3)),
            ((1, 1), int(12) * &h / &d),
            ((2, 1), int(-3) * (int(3) * &h - int(2)) / &d),
            ((0, 2), int(3)),
            ((1, 2), int(-3)),
            ((0, 3), int(-1)),
        ]);
        ensure!(f_chapoton(&h).unwrap().poly() == &expanded, "Chap({h}) line");
        rows += 1;
    }
    let coords = [
        (mono(&[A(4)]), (14, 7, 9, 9)),
        (mono(&[B(4)]), (35, 10, 10, 15)),
        (mono(&[D(4)]), (20, 8, 9, 11)),
        (mono(&[F4]), (66, 12, 10, 23)),
        (mono(&[H4]), (232, 16, 11, 59)),
        (mono(&[A(1), A(3)]), (5, 5, 8, 6)),
        (mono(&[A(1), B(3)]), (10, 8, 9, 9)),
        (mono(&[A(1), H3]), (21, 14, 10, 15)),
    ];
    let bary = [
        [rat(253, 336), rat(25, 112), rat(1, 42), rat(167, 84), rat(22, 21)],
        [rat(43, 84), rat(11, 28), rat(2, 21), rat(41, 21), rat(46, 21)],
        [rat(53, 84), rat(9, 28), rat(1, 21), rat(31, 21), rat(2, 21)],
        [rat(47, 168), rat(27, 56), rat(5, 21), rat(37, 42), rat(-11, 21)],
        [int(0), int(0), int(1), int(0), int(0)],
        [rat(7, 8), rat(1, 8), int(0), rat(3, 2), int(0)],
        [rat(5, 8), rat(3, 8), int(0), rat(3, 2), int(0)],
        [int(0), int(1), int(0), int(0), int(0)],
    ];
    for ((f, (a, b, c, d)), bc) in coords.iter().zip(bary) {
        let got = rank4_coords(&a_decompose(f).unwrap()).unwrap();
        ensure!(got == Rank4Coords::from_ints(*a, *b, *c, *d), "{}: coordinates {got}", f.provenance());
        ensure!(barycentric_p4(&got).unwrap().to_vec() == bc, "{}: barycentric coordinates", f.provenance());
    }
    let mut rng = StdRng::seed_from_u64(0x00F1);
    for _ in 0..5 {
        let p = int(2) + random_pos(&mut rng, 40, 7);
        let q = int(2) + random_pos(&mut rng, 40, 7);
        let f = FTriangle::new(dihedral_poly(&p) * dihedral_poly(&q), 4, int(1), Provenance::Expr("I2pI2q".into())).unwrap();
        let got = rank4_coords(&a_decompose(&f).unwrap()).unwrap();
        let one = Rational::one();
        let want = Rank4Coords {
            a: (&p - &one) * (&q - &one),
            b: &p + &q - int(2),
            c: &p + &q + int(2),
            d: &p + &q - &one,
        };
        ensure!(got == want, "I2({p})I2({q}): {got}");
        let s1 = random_pos(&mut rng, 30, 5);
        let s2 = &s1 * &s1 * rat(rng.gen_range(0..=8), 32);
        let f = f_virtual(4, &[s1.clone(), s2.clone()]).unwrap();
        let got = rank4_coords(&a_decompose(&f).unwrap()).unwrap();
        let want = Rank4Coords { a: &one + &s1 + &s2, b: int(2) + &s1, c: int(6) + &s1, d: int(3) + &s1 };
        ensure!(got == want, "I4({s1}, {s2}): {got}");
    }
    Ok(format!("{rows} polynomial lines, 8 coordinate rows, 10 symbolic samples"))
}

fn c2_structure() -> Outcome {
    let ms = all_monomials();
    for m in &ms {
        let f = f_of(&CoxSum::monomial(m.clone())).unwrap();
        let name = f.provenance().to_string();
        let l = f.rank();
        let (zero, one) = (Rational::zero(), Rational::one());
        ensure!(f.poly().eval(&zero, &zero) == int(1), "{name}: F(0,0)");
        let rot = f.poly().rotate();
        ensure!(if l.is_multiple_of(2) { rot == *f.poly() } else { -rot == *f.poly() }, "{name}: rotation");
        let omy = UniPoly::from_ints(&[1, -1]).pow(l);
        let my = UniPoly::from_ints(&[0, -1]).pow(l);
        ensure!(f.poly().specialize_x(&zero) == omy, "{name}: F(0, y)");
        ensure!(f.poly().specialize_x(&one) == my, "{name}: F(1, y)");
        let bd = f_of(&m.boundary()).unwrap();
        ensure!(f.poly().partial(Var::Y) == -bd.poly().clone(), "{name}: derivative of the boundary");
        let mut prod = BiPoly::one();
        for t in m.factors() {
            prod = prod * irr(*t).poly().clone();
        }
        ensure!(&prod == f.poly(), "{name}: multiplicativity");
        if l >= 2 {
            let a = a_decompose(&f).unwrap();
            ensure!(a.sign_pattern_violation().is_none(), "{name}: A-part sign pattern");
        }
    }
    for row in tables::PRODUCT_ROWS {
        let f = match row.name {
            "A1*A3" => mono(&[A(1), A(3)]),
            "A1*B3" => mono(&[A(1), B(3)]),
            _ => mono(&[A(1), H3]),
        };
        ensure!(f.poly() == &BiPoly::from_int_terms(row.expanded), "{}: product against table", row.name);
    }
    Ok(format!("{} monomials", ms.len()))
}

/// Roots in `[0, 1]` with multiplicity, via square-free factors and classic Sturm chains.
fn sturm_oracle(p: &UniPoly) -> usize {
    p.square_free_decomposition()
        .iter()
        .filter(|(g, _)| !g.is_constant())
        .map(|(g, m)| m * root_count(g, &int(0), &int(1), Endpoints::Closed).unwrap())
        .sum()
}

fn c3_sturm() -> Outcome {
    let grid = default_grid(GRID);
    let ms = all_monomials();
    let mut checked = 0;
    for m in &ms {
        let f = f_of(&CoxSum::monomial(m.clone())).unwrap();
        for y in &grid {
            let c = count_roots_at(&f, y).map_err(|e| format!("{}: {e}", f.provenance()))?;
            ensure!(c.total == f.rank() as usize, "{} at y = {y}: count {} via {:?}", f.provenance(), c.total, c.route);
            let o = sturm_oracle(&f.at_y(y));
            ensure!(o == c.total, "{} at y = {y}: oracle {o}, D-sequence {}", f.provenance(), c.total);
            checked += 1;
        }
    }
    Ok(format!("{} triangles x {} values of y = {checked} counts", ms.len(), grid.len()))
}

/// Whether the positive root of `q` lies in `(lo, hi)`, certified by signs.
fn root_between(q: &UniPoly, lo: &Rational, hi: &Rational) -> bool {
    root_count(q, &int(0), &int(10), Endpoints::Closed).unwrap() == 1
        && root_count(q, lo, hi, Endpoints::Open).unwrap() == 1
}

fn c4_regions() -> Outcome {
    let l = rat(1, 20);
    let qa = UniPoly::from_coeffs(vec![quadratic_a(&l, &int(0)), rat(6, 5), int(1)]);
    let qb = UniPoly::from_coeffs(vec![quadratic_b(&l, &int(0)), int(1), int(1)]);
    ensure!(qa == UniPoly::from_coeffs(vec![rat(-31, 25), rat(6, 5), int(1)]), "I/II quadratic at 1/20");
    for s in [int(0), int(1), rat(2, 3), int(5)] {
        let a = UniPoly::from_coeffs(vec![rat(-31, 25), rat(6, 5), int(1)]).eval(&s);
        ensure!(quadratic_a(&l, &s) == a, "quadratic a) at s = {s}");
        let b = UniPoly::from_coeffs(vec![rat(-41, 25), int(1), int(1)]).eval(&s);
        ensure!(quadratic_b(&l, &s) == b, "quadratic b) at s = {s}");
    }
    ensure!(root_between(&qa, &rat(6649, 10000), &rat(6650, 10000)), "I/II root not in (0.6649, 0.6650)");
    ensure!(root_between(&qb, &rat(8747, 10000), &rat(8748, 10000)), "II/III root not in (0.8747, 0.8748)");
    let r = classify_p3(&P3Point::new(l.clone(), rat(1, 2)).unwrap());
    ensure!(r == P3Region::I, "(1/20, 1/2) classified {r}");
    Ok("roots in (0.6649, 0.6650) and (0.8747, 0.8748); (1/20, 1/2) in I".into())
}

fn c5_conjecture_a() -> Outcome {
    let grid = default_grid(GRID);
    let opts = VerifyOptions::default();
    let a1f = |s: i64| {
        let a1finf = irr(A(1)).mul(&ftri::ftriangle::f_infty_power(1));
        irr(H3).add(&a1finf.scale(&int(s))).unwrap()
    };
    let mut subjects: Vec<(String, FTriangle)> = [A(3), B(3), H3, A(4), B(4), D(4), F4, H4]
        .iter()
        .map(|t| (t.to_string(), irr(*t)))
        .collect();
    for h in [11, 22] {
        subjects.push((format!("Chap({h})"), f_chapoton(&int(h)).unwrap()));
    }
    for s in [1, 10, 20] {
        subjects.push((format!("H3 + {s}*A1*Finf"), a1f(s)));
    }
    let mut degenerate = 0;
    for (name, f) in &subjects {
        let r = verify_all(f, &grid, &opts).map_err(|e| format!("{name}: {e}"))?;
        ensure!(r.pass(), "{name}: {:?}", r.failures.first());
        degenerate += r.a6.excluded.len();
    }
    let ls = |s: Rational| ftri::regions::f_lambda_s(&P3Point::new(rat(1, 20), s).unwrap());
    let one = verify_a3(&ls(rat(1, 2)), &grid, &opts).unwrap();
    ensure!(one.iter().any(|r| !r.pass()), "A3 passes for LS(1/20, 1/2)");
    let two = ls(rat(3, 4));
    ensure!(classify_p3(&P3Point::new(rat(1, 20), rat(3, 4)).unwrap()) == P3Region::II, "LS(1/20, 3/4) not in II");
    ensure!(verify_a3(&two, &grid, &opts).unwrap().iter().all(|r| r.pass()), "A3 fails for LS(1/20, 3/4)");
    ensure!(verify_a4(&two, &grid, &opts).unwrap().iter().any(|r| !r.pass()), "A4 passes for LS(1/20, 3/4)");
    let coarse = default_grid(8);
    for t in [A(3), B(3), H3] {
        let f = mono(&[A(1), t]);
        let r = verify_all(&f, &coarse, &opts).unwrap();
        let bends = r.bending.map_err(|e| format!("A1{t}: {e}"))?;
        ensure!(
            bends.iter().any(|b| !b.boundary && b.x == "1/2" && b.y == "1/2"),
            "A1{t}: no bending at (1/2, 1/2)"
        );
        let g = translate_closure(&f, &[int(0), rat(1, 10)]).unwrap();
        let r = verify_all(&g, &coarse, &opts).unwrap();
        let bends = r.bending.map_err(|e| format!("A1{t} + Finf^2/10: {e}"))?;
        ensure!(bends.iter().all(|b| b.boundary), "A1{t} + Finf^2/10: interior bending {:?}", bends);
    }
    Ok(format!("{} triangles pass on {} values of y ({degenerate} A6 exclusions)", subjects.len(), grid.len()))
}

fn c6_appendix() -> Outcome {
    let table = [(A(3), 1), (B(3), 3), (H3, 8), (A(4), -1), (B(4), -4), (D(4), -2), (F4, -10), (H4, -42)];
    for (t, v) in table {
        let (value, _) = skew_growth_check(&irr(t)).unwrap();
        ensure!(value == int(v), "{t}: skew growth {value}, table {v}");
    }
    for p in 5..=12u32 {
        let (value, _) = skew_growth_check(&irr(I2(p))).unwrap();
        ensure!(value == int(2 - p as i64), "I2({p}): skew growth {value}");
    }
    for p in [rat(5, 2), rat(31, 7), int(100)] {
        let f = FTriangle::new(dihedral_poly(&p), 2, int(1), Provenance::Expr("I2".into())).unwrap();
        let (value, _) = skew_growth_check(&f).unwrap();
        ensure!(value == int(2) - &p, "I2({p}): skew growth {value}");
    }
    let mut subjects: Vec<(String, FTriangle)> = Vec::new();
    for l in 2..=4 {
        for m in monomials_of_rank(&tabulated_types(), l) {
            let f = f_of(&CoxSum::monomial(m)).unwrap();
            subjects.push((f.provenance().to_string(), f));
        }
    }
    for h in [1, 2, 4, 10, 11, 22] {
        subjects.push((format!("Chap({h})"), f_chapoton(&int(h)).unwrap()));
    }
    let mut failures = Vec::new();
    for (name, f) in &subjects {
        let mut conds = check_71(f).unwrap();
        if f.rank() >= 3 {
            conds.extend(check_72(f).unwrap());
        }
        for c in conds.iter().filter(|c| !c.pass) {
            failures.push(format!("{name} k = {} value {}", c.k, c.value));
        }
    }
    let mut rng = StdRng::seed_from_u64(0x00E3);
    for _ in 0..50 {
        let a = random_nonzero(&mut rng, 60, 9);
        let b = random_nonzero(&mut rng, 60, 9);
        let formula = (int(18) * &a - int(3) * &a * &b - &b * &b) / int(18);
        let p = UniPoly::from_coeffs(vec![int(1), -(&a + &b) / int(2), a.clone()]);
        let q = UniPoly::from_coeffs(vec![int(1), -&b / int(3)]);
        let r = sylvester_resultant(&p, &q).unwrap();
        ensure!(r == formula, "Example 3 at ({a}, {b}): resultant {r}, formula {formula}");
        let apart = BiPoly::from_terms([((0, 0), (&a + &b) / int(2)), ((1, 0), -a.clone()), ((0, 1), -b.clone())]);
        let f = from_a_part(&apart, 3, &int(1), Provenance::Expr("ab".into()));
        let v = &check_72(&f).unwrap()[0].value;
        ensure!(-v == formula, "Example 3 at ({a}, {b}): library value {v}");
    }
    if failures.is_empty() {
        Ok(format!("{} triangles, 50 random (a, b)", subjects.len()))
    } else {
        Err(format!("inequalities violated: {}", failures.join("; ")))
    }
}

/// Refine two isolating intervals until they are disjoint.
fn strictly_below(a: &IsolatedRoot, b: &IsolatedRoot) -> bool {
    let (mut a, mut b) = (a.clone(), b.clone());
    for _ in 0..200 {
        if a.hi < b.lo {
            return true;
        }
        if b.hi < a.lo {
            return false;
        }
        a.bisect();
        b.bisect();
    }
    false
}

fn simple_roots_in_unit(p: &UniPoly) -> Result<Vec<IsolatedRoot>, String> {
    let w = rat(1, 1 << 20);
    let roots = ftri::exactmath::isolate_roots(p, &int(0), &int(1), &w).map_err(|e| e.to_string())?;
    ensure!(roots.iter().all(|r| r.multiplicity == 1), "{p}: multiple root");
    ensure!(roots.iter().all(|r| !r.exact_value().is_some_and(|v| v.is_zero())), "{p}: root at 0");
    Ok(roots)
}

fn c7_fplus_f() -> Outcome {
    let mut n = 0;
    for t in tabulated_types() {
        let f = irr(t);
        let l = f.rank() as usize;
        let plus = simple_roots_in_unit(&f.f_plus())?;
        let full = simple_roots_in_unit(&f.f_full())?;
        ensure!(plus.len() == l, "{t}: f+ has {} roots in (0, 1]", plus.len());
        ensure!(full.len() == l, "{t}: f has {} roots in (0, 1]", full.len());
        for (i, (a, b)) in full.iter().zip(&plus).enumerate() {
            ensure!(strictly_below(a, b), "{t}: root {} of f not below root of f+", i + 1);
        }
        n += 1;
    }
    Ok(format!("{n} irreducible types"))
}

/// Roots in `(0, 1)` by recursive bisection with Descartes' rule on the
/// Möbius-transformed polynomial; independent of Sturm chains.
fn descartes_count(p: &UniPoly) -> usize {
    fn variations(q: &UniPoly) -> usize {
        let signs: Vec<i32> = q.coeffs().iter().filter(|c| !c.is_zero()).map(|c| if c.is_positive() { 1 } else { -1 }).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }
    // p on (0, 1) -> roots in (0, inf) of (1 + x)^d p(1 / (1 + x))
    fn on_unit(p: &UniPoly) -> UniPoly {
        let mut c = p.coeffs().to_vec();
        c.reverse();
        UniPoly::from_coeffs(c).taylor_shift(&int(1))
    }
    fn go(p: &UniPoly, depth: u32) -> usize {
        match variations(&on_unit(p)) {
            0 => 0,
            1 => 1,
            _ => {
                assert!(depth < 200);
                let half = rat(1, 2);
                let left = p.compose(&UniPoly::from_coeffs(vec![int(0), half.clone()]));
                let right = p.compose(&UniPoly::from_coeffs(vec![half.clone(), half.clone()]));
                let mid = p.eval(&half).is_zero() as usize;
                go(&left, depth + 1) + go(&right, depth + 1) + mid
            }
        }
    }
    go(p, 0)
}

fn random_poly(rng: &mut StdRng, deg: usize) -> UniPoly {
    loop {
        let c: Vec<Rational> = (0..=deg).map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=4))).collect();
        let p = UniPoly::from_coeffs(c);
        if !p.is_zero() {
            return p;
        }
    }
}

fn c8_oracles() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5EED);
    let mut total_roots = 0;
    let mut done = 0;
    while done < 500 {
        let deg = rng.gen_range(1..=6);
        // products of small factors so that roots actually land in (0, 1)
        let mut p = UniPoly::one();
        while p.degree().unwrap_or(0) < deg {
            let r = rat(rng.gen_range(-3..=12), rng.gen_range(1..=9));
            if rng.gen_bool(0.7) {
                p = p * UniPoly::linear_root(&r);
            } else {
                p = p * random_poly(&mut rng, 2);
            }
        }
        let p = p.square_free_part();
        if p.is_constant() || p.eval(&int(0)).is_zero() || p.eval(&int(1)).is_zero() {
            continue;
        }
        let sturm = SturmChain::new(&p).unwrap().count_half_open(&int(0), &int(1));
        let brute = descartes_count(&p);
        ensure!(sturm == brute, "{p}: Sturm {sturm}, bisection {brute}");
        total_roots += sturm;
        done += 1;
    }
    let mut zero = 0;
    for i in 0..200 {
        let (dp, dq) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let mut p = random_poly(&mut rng, dp);
        let mut q = random_poly(&mut rng, dq);
        if i % 2 == 0 {
            let dg = rng.gen_range(1..=2);
            let g = random_poly(&mut rng, dg);
            p = p * g.clone();
            q = q * g;
        }
        if p.is_constant() || q.is_constant() {
            continue;
        }
        let r = resultant(&p, &q).unwrap();
        ensure!(r == sylvester_resultant(&p, &q).unwrap(), "{p}, {q}: Euclidean and Sylvester resultants differ");
        let common = !p.gcd(&q).is_constant();
        ensure!(r.is_zero() == common, "{p}, {q}: resultant {r}, common factor {common}");
        zero += r.is_zero() as usize;
    }
    Ok(format!("500 Sturm counts ({total_roots} roots), 200 resultants ({zero} zero)"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 table fidelity", c1_tables),
        ("2 structural identities", c2_structure),
        ("3 Sturm counting", c3_sturm),
        ("4 region boundaries", c4_regions),
        ("5 zero-locus checks", c5_conjecture_a),
        ("6 appendix cross-checks", c6_appendix),
        ("7 f+ and f roots", c7_fplus_f),
        ("8 oracle equivalence", c8_oracles),
    ];
    let only: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, run) in criteria {
        if !only.is_empty() && !only.iter().any(|o| name.starts_with(o.as_str())) {
            continue;
        }
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS criterion {name}: {msg} [{secs:.1}s]"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg} [{secs:.1}s]");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
