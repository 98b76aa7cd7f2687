use aw_core::*;
use num::Zero;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn v(points: &[u64]) -> Valuation {
    Valuation::normalize(points).unwrap()
}

fn random_points(rng: &mut ChaCha8Rng, m: usize, p: u64) -> Vec<u64> {
    // random composition of p into m positive parts
    let mut cuts: Vec<u64> = (1..p).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<u64> = cuts.into_iter().take(m - 1).collect();
    cuts.sort_unstable();
    cuts.push(p);
    let mut prev = 0;
    cuts.into_iter()
        .map(|c| {
            let part = c - prev;
            prev = c;
            part
        })
        .collect()
}

// Alice's best true utility over all permutations of a fully tied profile
// (x, x): fractional knapsack by a_i/x_i with half the declared mass.
fn alice_перм_max(a: &Valuation, x: &Valuation) -> Rational {
    let mut idx: Vec<usize> = (0..a.len()).collect();
    idx.sort_by(|&i, &j| {
        (a.value(j) * x.value(i)).cmp(&(a.value(i) * x.value(j)))
    });
    let mut budget = rat(1, 2);
    let mut total = rat(0, 1);
    for &i in &idx {
        if budget.is_zero() {
            break;
        }
        let mass = x.value(i).clone();
        if mass <= budget {
            budget -= &mass;
            total += a.value(i);
        } else {
            let frac = &budget / &mass;
            total += a.value(i) * frac;
            budget = rat(0, 1);
        }
    }
    total
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(20240811);
    let mut instances = 0u32;
    let mut with_violation = 0u32;
    let mut violation_eqs = 0u32;
    let mut total_eqs = 0u32;
    let mut lemma_fail = 0u32;
    let mut max_ratio = rat(0, 1);
    let mut ratio_over = 0u32;

    for trial in 0..300 {
        let m = rng.gen_range(2..=4usize);
        let p = rng.gen_range(m as u64..=9);
        let ap = random_points(&mut rng, m, p);
        let bp = random_points(&mut rng, m, p);
        let a = v(&ap);
        let b = v(&bp);
        let designated = if trial % 2 == 0 { Player::Bob } else { Player::Alice };
        let truth = match designated {
            Player::Alice => a.clone(),
            Player::Bob => b.clone(),
        };
        let game = Game::new(
            a.clone(),
            b.clone(),
            Variant::Discrete { points: p },
            TieBreakRule::informed(designated, truth),
        )
        .unwrap();
        let audited = equilibrium_fairness_audit(&game, 50_000_000).unwrap();
        instances += 1;
        total_eqs += audited.len() as u32;
        let bad = audited.iter().filter(|x| !x.violations.is_empty()).count();
        if bad > 0 {
            with_violation += 1;
            violation_eqs += bad as u32;
            if with_violation <= 5 {
                println!(
                    "violating instance #{trial}: a={ap:?} b={bp:?} P={p} designated={designated}"
                );
                for ae in audited.iter().filter(|x| !x.violations.is_empty()) {
                    println!(
                        "  x={:?} y={:?} viol={:?} welfare={}",
                        ae.report.profile.alice.points(),
                        ae.report.profile.bob.points(),
                        ae.violations,
                        ae.report.welfare
                    );
                }
            }
        }
        // lemma-style check at symmetric PNEs under Informed(Bob)
        if designated == Player::Bob {
            for ae in &audited {
                if ae.report.profile.alice == ae.report.profile.bob {
                    let achieved = a
                        .utility(game.outcome(&ae.report.profile).alice())
                        .unwrap();
                    let best = alice_перм_max(&a, &ae.report.profile.alice);
                    if achieved != best {
                        lemma_fail += 1;
                    }
                }
            }
        }
        match price_of_anarchy(&game, 50_000_000).unwrap() {
            PoaOutcome::Ratio { ratio, .. } => {
                if ratio > rat(4, 3) {
                    ratio_over += 1;
                    println!("RATIO OVER 4/3: {ratio} at a={ap:?} b={bp:?} P={p}");
                }
                if ratio > max_ratio {
                    max_ratio = ratio;
                }
            }
            PoaOutcome::NoPureNash { .. } => println!("no PNE?! a={ap:?} b={bp:?}"),
        }
    }
    println!("instances: {instances}");
    println!("instances with >=1 violation: {with_violation}");
    println!("violating equilibria: {violation_eqs} / {total_eqs}");
    println!("lemma-style symmetric-PNE optimality failures: {lemma_fail}");
    println!("max PoA ratio: {max_ratio} (over 4/3: {ratio_over})");
}
