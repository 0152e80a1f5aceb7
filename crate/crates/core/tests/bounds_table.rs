use neighborly::bounds::{
    agkp_upper, alon_lower, b_config_size, g_function, huang_sudakov_upper, kleitman_bound,
    main2_upper, main_upper, refined_upper, report,
};
use neighborly::cli::table::{generate, to_csv, CSV_HEADER};
use neighborly::constructions::b_config;
use neighborly::reference::IMPROVEMENT_TABLE;
use neighborly::vector::binary_distance;

/// Scaled-integer oracle: every weighted term is multiplied by `2^d`, so the
/// whole evaluation stays in integers and the floor is a single shift.
struct Oracle {
    pascal: Vec<Vec<u128>>,
}

impl Oracle {
    fn new() -> Self {
        let mut pascal = vec![vec![1u128]];
        for n in 1..=40 {
            let prev: &Vec<u128> = &pascal[n - 1];
            let mut row = vec![1u128; n + 1];
            for j in 1..n {
                row[j] = prev[j - 1] + prev[j];
            }
            pascal.push(row);
        }
        Self { pascal }
    }

    fn c(&self, n: usize, r: usize) -> u128 {
        if r > n {
            0
        } else {
            self.pascal[n][r]
        }
    }

    fn ball(&self, n: usize, r: usize) -> u128 {
        (0..=r.min(n)).map(|j| self.c(n, j)).sum()
    }

    fn b(&self, r: usize, d: usize) -> u128 {
        if r % 2 == 0 {
            self.ball(d, r / 2)
        } else {
            2 * self.ball(d - 1, r / 2)
        }
    }

    /// `2^d` times the weighted sum from `start` on, plus closing terms.
    fn scaled_tail(&self, k: usize, d: usize, start: usize) -> i128 {
        let m = d - k;
        let last = if m % 2 == 0 { (m as i64 - 2) / 2 } else { (m as i64 - 3) / 2 };
        let mut acc: i128 = 0;
        let mut j = start as i64;
        while j <= last {
            let ju = j as usize;
            let coef = (1i128 << (d - ju - 1)) - (1i128 << (k + ju));
            acc += coef * self.b(k + 2 * ju, d) as i128;
            j += 1;
        }
        if m % 2 == 0 {
            acc + (1i128 << ((d + k) / 2 + d))
        } else {
            acc + ((self.b(d - 1, d) as i128) << (d - (m + 1) / 2)) + (1i128 << ((d + k - 1) / 2 + d))
        }
    }

    fn floor_tail(&self, k: usize, d: usize, start: usize) -> u128 {
        (self.scaled_tail(k, d, start) >> d) as u128
    }

    fn main(&self, k: usize, d: usize) -> u128 {
        self.floor_tail(k, d, 0)
    }

    fn main2(&self, k: usize, d: usize) -> u128 {
        self.ball(d, k).max(self.floor_tail(k, d, 1))
    }

    fn refined(&self, k: usize, d: usize) -> u128 {
        let m = d - k;
        let mut vals = Vec::new();
        let last_h = if m % 2 == 0 { (m - 2) / 2 } else { (m - 1) / 2 };
        for h in 0..=last_h {
            let v = if m % 2 == 1 && h == last_h {
                (self.ball((d + k + 1) / 2, k) << h).max(1 << ((d + k - 1) / 2))
            } else {
                (self.ball(d - h, k) << h).max(self.floor_tail(k, d, h + 1))
            };
            vals.push(v);
        }
        *vals.iter().min().unwrap()
    }

    fn hs(&self, k: usize, d: usize) -> u128 {
        1 + (1..=k).map(|i| (1u128 << (i - 1)) * self.c(d, i)).sum::<u128>()
    }

    fn agkp(&self, k: usize, d: usize) -> u128 {
        (1..)
            .take_while(|&i| k + 2 * i - 2 < d)
            .map(|i| (1u128 << (d - i)) + self.ball(d, (k + 2 * i - 2).div_ceil(2)))
            .min()
            .unwrap()
    }
}

#[test]
fn formulas_match_scaled_integer_oracle() {
    let o = Oracle::new();
    for d in 2..=20 {
        for k in 1..d {
            assert_eq!(main_upper(k, d).unwrap(), o.main(k, d), "main({k},{d})");
            assert_eq!(main2_upper(k, d).unwrap(), o.main2(k, d), "main2({k},{d})");
            assert_eq!(refined_upper(k, d).unwrap(), o.refined(k, d), "refined({k},{d})");
            assert_eq!(huang_sudakov_upper(k, d).unwrap(), o.hs(k, d));
            assert_eq!(agkp_upper(k, d).unwrap(), o.agkp(k, d));
            assert_eq!(b_config_size(k, d).unwrap(), o.b(k, d));
        }
    }
}

#[test]
fn regenerated_table_matches_every_reference_row() {
    let rows = generate(20, 20).unwrap();
    let mut expected = String::from(CSV_HEADER);
    expected.push('\n');
    for a in IMPROVEMENT_TABLE {
        let star = if a.starred { "*" } else { "" };
        expected.push_str(&format!(
            "{},{},{},{},{},{star}\n",
            a.k, a.d, a.lower, a.prior_upper, a.new_upper
        ));
    }
    assert_eq!(to_csv(&rows), expected);
    for r in &rows {
        assert!(r.new_upper < r.prior_upper);
        let prior = huang_sudakov_upper(r.k, r.d)
            .unwrap()
            .min(agkp_upper(r.k, r.d).unwrap());
        assert_eq!(r.prior_upper, prior.0);
    }
}

#[test]
fn spot_rows() {
    let rows = generate(20, 20).unwrap();
    let find = |k: usize, d: usize| *rows.iter().find(|r| r.k == k && r.d == d).unwrap();
    let spots: [(usize, usize, u128, u128, u128, bool); 11] = [
        (2, 4, 9, 13, 9, false),
        (2, 10, 36, 101, 95, true),
        (3, 14, 180, 1653, 756, true),
        (4, 19, 1080, 35246, 8459, true),
        (5, 7, 74, 128, 74, false),
        (5, 20, 3125, 125996, 17690, false),
        (6, 8, 150, 221, 150, false),
        (9, 11, 1152, 2048, 1217, false),
        (12, 14, 9216, 14668, 9811, false),
        (15, 17, 73728, 131072, 78702, false),
        (18, 20, 589824, 956198, 632265, false),
    ];
    for (k, d, lo, prior, new, star) in spots {
        let r = find(k, d);
        assert_eq!((r.lower, r.prior_upper, r.new_upper, r.starred), (lo, prior, new, star), "({k},{d})");
    }
}

#[test]
fn structural_invariants_up_to_twenty() {
    for d in 2..=20 {
        for k in 1..d {
            let m = d - k;
            let last = if m % 2 == 0 { (m - 2) / 2 } else { (m - 1) / 2 };
            for i in 0..last {
                assert!(g_function(k, d, i).unwrap() >= g_function(k, d, i + 1).unwrap());
            }
            assert!(main_upper(k, d).unwrap() <= agkp_upper(k, d).unwrap());
            assert!(refined_upper(k, d).unwrap() <= main2_upper(k, d).unwrap());
            let r = report(k, d).unwrap();
            assert!(r.best_lower <= r.best_upper, "({k},{d})");
            assert!(alon_lower(k, d).unwrap() <= r.best_upper);
        }
    }
}

#[test]
fn b_config_attains_kleitman_with_diameter_k() {
    for d in 2..=12 {
        for k in 1..d {
            let code = b_config(k, d).unwrap();
            assert_eq!(code.len() as u128, kleitman_bound(k, d).unwrap().0);
            let mut diameter = 0;
            for (i, a) in code.iter().enumerate() {
                for b in &code[i + 1..] {
                    diameter = diameter.max(binary_distance(a, b).unwrap());
                }
            }
            assert_eq!(diameter, k, "({k},{d})");
        }
    }
}
