//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Built with `harness = false` so the lines always show.

use std::collections::HashMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sigmab::bmc::{BicharBmc, Bmc, FreeBmc, PermBmc};
use sigmab::braid::{BraidGen, BraidWord};
use sigmab::config::{Configuration, CrossingConvention};
use sigmab::equiv;
use sigmab::laws::{self, random_configuration, LawReport, Sample};
use sigmab::sigma::{SigmaB, SigmaObj};
use sigmab::words::Word;
use sigmab_oracle::{
    decide, enumerate_words, free_group_action, free_reduce, random_rewrite, Verdict,
};

const SEED: u64 = 20_240_601;

type Verdicts = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdicts);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("braid oracle agreement", c1_oracle),
        ("bmc law suites", c2_bmc_laws),
        ("strict horizontal tensor", c3_horizontal),
        ("strict interchange", c4_interchange),
        ("eckmann-hilton is the braiding", c5_eckmann_hilton),
        ("comparison functor checks", c6_equivalence),
        ("weakness witnesses", c7_weakness),
        ("mutation sensitivity", c8_mutation),
        ("cli determinism", c9_cli_determinism),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let secs = start.elapsed().as_secs_f64();
        let (tag, detail) = match &verdict {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        all &= verdict.is_ok();
        println!("criterion {} {tag} {name}: {detail} ({secs:.1}s)", i + 1);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn ensure(ok: bool, detail: String) -> Verdicts {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn within(start: Instant, limit: Duration, detail: String) -> Verdicts {
    let elapsed = start.elapsed();
    ensure(
        elapsed < limit,
        format!(
            "{detail}; {:.1}s of {}s budget",
            elapsed.as_secs_f64(),
            limit.as_secs()
        ),
    )
}

fn summarize(reports: &[LawReport]) -> Verdicts {
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
    let cases: usize = reports.iter().map(|r| r.cases).sum();
    if failed.is_empty() {
        Ok(format!("{} laws, {cases} cases, 0 failures", reports.len()))
    } else {
        Err(failed
            .iter()
            .map(|r| r.to_text())
            .collect::<Vec<_>>()
            .join("; "))
    }
}

// --- 1 -----------------------------------------------------------------------

fn to_braid(strands: usize, raw: &[i32]) -> BraidWord {
    let gens = raw
        .iter()
        .map(|&g| {
            let i = g.unsigned_abs() as usize;
            if g > 0 {
                BraidGen::positive(i)
            } else {
                BraidGen::inverse(i)
            }
        })
        .collect();
    BraidWord::new(strands, gens).expect("oracle letters are in range")
}

/// Exhaustive part. The oracle's free-group action is a complete invariant,
/// so pairs are settled class by class: every word must be braid-equal to
/// its class representative (and the rewrite search must confirm it), and
/// representatives of different classes must be braid-unequal. This decides
/// every ordered pair without visiting each one.
fn exhaustive(strands: usize, max_len: usize) -> Result<u64, String> {
    let words = enumerate_words(strands, max_len);
    let mut classes: HashMap<Vec<Vec<i32>>, Vec<usize>> = HashMap::new();
    for (i, w) in words.iter().enumerate() {
        classes
            .entry(free_group_action(strands, w))
            .or_default()
            .push(i);
    }
    let braids: Vec<BraidWord> = words.iter().map(|w| to_braid(strands, w)).collect();
    let mut reps = Vec::new();
    for members in classes.values() {
        let rep = members[0];
        for &m in &members[1..] {
            if !braids[m]
                .braid_eq(&braids[rep])
                .map_err(|e| e.to_string())?
            {
                return Err(format!(
                    "{} vs {}: oracle equal, braid_eq says not",
                    braids[m], braids[rep]
                ));
            }
            if decide(strands, &words[m], &words[rep], 10) != Verdict::Equal {
                return Err(format!(
                    "{} vs {}: rewrite search inconclusive",
                    braids[m], braids[rep]
                ));
            }
        }
        reps.push(rep);
    }
    for (i, &r) in reps.iter().enumerate() {
        for &q in &reps[i + 1..] {
            if braids[r].braid_eq(&braids[q]).map_err(|e| e.to_string())? {
                return Err(format!(
                    "{} vs {}: oracle unequal, braid_eq says equal",
                    braids[r], braids[q]
                ));
            }
        }
    }
    let n = words.len() as u64;
    Ok(n * n)
}

fn random_raw(rng: &mut ChaCha8Rng, strands: usize, max_len: usize) -> Vec<i32> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let i = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect()
}

/// A random chain of rewrites of `u` within length 6, redrawn a few times
/// so that it usually lands on a different reduced word.
fn rewritten(rng: &mut ChaCha8Rng, strands: usize, u: &[i32]) -> Vec<i32> {
    let mut v = u.to_vec();
    for _ in 0..20 {
        let steps = rng.gen_range(4..=24);
        v = random_rewrite(strands, u, 6, steps, || rng.next_u64());
        if free_reduce(&v) != free_reduce(u) {
            break;
        }
    }
    v
}

fn c1_oracle() -> Verdicts {
    let start = Instant::now();
    let mut pairs = 0u64;
    for strands in 1..=4 {
        pairs += exhaustive(strands, 4)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut equal, mut distinct, mut sampled) = (0, 0, 0);
    for k in 0..5_000 {
        let strands = rng.gen_range(2..=4);
        let u = random_raw(&mut rng, strands, 6);
        let v = if k % 2 == 0 {
            random_raw(&mut rng, strands, 6)
        } else {
            rewritten(&mut rng, strands, &u)
        };
        let ours = to_braid(strands, &u)
            .braid_eq(&to_braid(strands, &v))
            .map_err(|e| e.to_string())?;
        let oracle = match decide(strands, &u, &v, 10) {
            Verdict::Equal => true,
            Verdict::NotEqual => false,
            Verdict::Inconclusive => {
                return Err(format!(
                    "oracle inconclusive on {u:?} vs {v:?} ({strands} strands)"
                ))
            }
        };
        if ours != oracle {
            return Err(format!(
                "disagreement on {u:?} vs {v:?} ({strands} strands)"
            ));
        }
        equal += usize::from(ours);
        distinct += usize::from(ours && free_reduce(&u) != free_reduce(&v));
        sampled += 1;
    }
    within(
        start,
        Duration::from_secs(120),
        format!("{pairs} exhaustive ordered pairs (len<=4, <=4 strands) and {sampled} sampled pairs ({equal} equal, {distinct} of them as distinct reduced words) agree"),
    )
}

// --- 2 -----------------------------------------------------------------------

fn c2_bmc_laws() -> Verdicts {
    let start = Instant::now();
    let mut reports = laws::check_bmc(&FreeBmc::standard(), SEED, 200);
    reports.extend(laws::check_bmc(&PermBmc, SEED, 200));
    reports.extend(laws::check_bmc(&BicharBmc::new(4), SEED, 200));
    let detail = summarize(&reports)?;
    within(
        start,
        Duration::from_secs(60),
        format!("free, perm, bichar:4: {detail}"),
    )
}

// --- 3 -----------------------------------------------------------------------

fn horizontal_strict<B: Sample>(
    s: &SigmaB<B>,
    rng: &mut ChaCha8Rng,
    count: usize,
) -> Result<(), String> {
    let empty = SigmaObj::new(Configuration::empty());
    for i in 0..count {
        let [x, y, z] = [(); 3].map(|_| {
            let n = rng.gen_range(0..=4);
            SigmaObj::new(random_configuration(rng, n, |r| s.base().random_label(r)))
        });
        let xy_z = s.htensor_obj(&s.htensor_obj(&x, &y), &z);
        let x_yz = s.htensor_obj(&x, &s.htensor_obj(&y, &z));
        let keys = xy_z.key() == x_yz.key()
            && s.htensor_obj(&x, &empty).key() == x.key()
            && s.htensor_obj(&empty, &x).key() == x.key();
        let identity = |m: &sigmab::sigma::Mor<B>| {
            let f = m.representative();
            m.source().key() == m.target().key()
                && s.base().mor_eq(f, &s.base().id(&s.base().source(f)))
        };
        let structure =
            identity(&s.hassoc(&x, &y, &z)) && identity(&s.hlunit(&x)) && identity(&s.hrunit(&x));
        if !(keys && structure) {
            return Err(format!(
                "{}: configuration {i}: X={x} Y={y} Z={z}",
                s.name()
            ));
        }
    }
    Ok(())
}

fn c3_horizontal() -> Verdicts {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 3);
    horizontal_strict(&SigmaB::new(FreeBmc::standard()), &mut rng, 500)?;
    horizontal_strict(&SigmaB::new(BicharBmc::new(4)), &mut rng, 500)?;
    Ok("500 triples each over free and bichar:4: keys strict, associator and unitors are identities".into())
}

// --- 4 -----------------------------------------------------------------------

fn interchange<B: Sample>(s: &SigmaB<B>) -> LawReport {
    let laws = laws::two_monoidal_laws(s);
    let (name, check) = laws
        .iter()
        .find(|(n, _)| *n == "interchange")
        .expect("the suite has an interchange law");
    laws::run_law(name, &s.name(), SEED, 200, check)
}

fn c4_interchange() -> Verdicts {
    summarize(&[
        interchange(&SigmaB::new(FreeBmc::standard())),
        interchange(&SigmaB::new(PermBmc)),
        interchange(&SigmaB::new(BicharBmc::new(4))),
    ])
}

// --- 5 -----------------------------------------------------------------------

fn eh_matches<B: Bmc>(s: &SigmaB<B>, a: &B::Obj, b: &B::Obj) -> Result<bool, String> {
    let eh = s.eh_braiding(&equiv::w_obj::<B>(a), &equiv::w_obj::<B>(b));
    let image = equiv::braiding_image(s, a, b).map_err(|e| e.to_string())?;
    Ok(s.sigma_equal(&eh, &image))
}

fn eh_bichar(convention: CrossingConvention) -> Verdicts {
    let s = SigmaB::with_convention(BicharBmc::new(4), convention);
    for a in 0..4u32 {
        for b in 0..4u32 {
            if !eh_matches(&s, &Word::leaf(a), &Word::leaf(b))? {
                return Err(format!(
                    "{}: EH differs from W(braiding) on labels ({a},{b})",
                    s.name()
                ));
            }
        }
    }
    let one = Word::leaf(1u32);
    let eh = s.eh_braiding(
        &equiv::w_obj::<BicharBmc>(&one),
        &equiv::w_obj::<BicharBmc>(&one),
    );
    let exponent = s.base().signed(eh.representative().exponent);
    ensure(
        exponent == 1,
        format!(
            "{}: 16 label pairs agree, labels (1,1) give scalar {exponent:+}",
            s.name()
        ),
    )
}

fn c5_eckmann_hilton() -> Verdicts {
    let free = SigmaB::new(FreeBmc::standard());
    for a in free.base().generators() {
        for b in free.base().generators() {
            if !eh_matches(&free, &Word::leaf(a.clone()), &Word::leaf(b.clone()))? {
                return Err(format!("free: EH differs from W(braiding) on ({a},{b})"));
            }
        }
    }
    let bichar = eh_bichar(CrossingConvention::Positive)?;
    Ok(format!("9 generator pairs in free agree; {bichar}"))
}

// --- 6 -----------------------------------------------------------------------

fn faithful_full_free() -> Verdicts {
    let s = SigmaB::new(FreeBmc::standard());
    let labels: Vec<String> = ["a", "b", "c"].map(String::from).to_vec();
    let source = Word::right_nest(&labels);
    let mut homs: HashMap<Vec<String>, Vec<_>> = HashMap::new();
    for raw in enumerate_words(3, 6) {
        let braid = to_braid(3, &raw);
        let target = braid.permutation().permute(&labels);
        let f = s
            .base()
            .mor(source.clone(), Word::right_nest(&target), braid)
            .map_err(|e| e.to_string())?;
        homs.entry(target).or_default().push(f);
    }
    let (mut words, mut pairs) = (0, 0);
    let mut keys: Vec<_> = homs.keys().cloned().collect();
    keys.sort();
    for key in keys {
        let sample = &homs[&key];
        let report = equiv::check_faithful_full(&s, sample);
        if !report.passed() {
            return Err(format!(
                "hom-set to {key:?}: {} faithfulness and {} fullness failures",
                report.faithful_failures.len(),
                report.full_failures.len()
            ));
        }
        words += sample.len();
        pairs += report.pairs;
    }
    Ok(format!(
        "faithful on {pairs} pairs and full on {words} braid words (len<=6, 3 strands)"
    ))
}

fn ess_surj<B: Sample>(s: &SigmaB<B>, rng: &mut ChaCha8Rng) -> Result<(), String> {
    for i in 0..100 {
        let n = rng.gen_range(0..=5);
        let x = SigmaObj::new(random_configuration(rng, n, |r| s.base().random_label(r)));
        let w = equiv::ess_surj_witness(s, &x).map_err(|e| e.to_string())?;
        if !equiv::witness_is_iso(s, &w).map_err(|e| e.to_string())? {
            return Err(format!(
                "{}: configuration {i} ({x}) has no two-sided witness",
                s.name()
            ));
        }
    }
    Ok(())
}

fn c6_equivalence() -> Verdicts {
    let (free, perm, bichar) = (
        SigmaB::new(FreeBmc::standard()),
        SigmaB::new(PermBmc),
        SigmaB::new(BicharBmc::new(4)),
    );
    let mut reports = laws::check_equivalence(&free, SEED, 200);
    reports.extend(laws::check_equivalence(&perm, SEED, 200));
    reports.extend(laws::check_equivalence(&bichar, SEED, 200));
    let laws = summarize(&reports)?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    ess_surj(&free, &mut rng)?;
    ess_surj(&perm, &mut rng)?;
    ess_surj(&bichar, &mut rng)?;
    let ff = faithful_full_free()?;
    Ok(format!(
        "{laws}; 300 essential-surjectivity witnesses are isos; {ff}"
    ))
}

// --- 7 -----------------------------------------------------------------------

fn c7_weakness() -> Verdicts {
    let s = SigmaB::new(FreeBmc::standard());
    let unit = s.unit();
    let x = equiv::w_obj::<FreeBmc>(&Word::leaf("a".to_string()));
    let xi = s.vtensor_obj(&x, &unit);
    let unit_weak = xi.key() != x.key();
    let [a, b, c] = ["a", "b", "c"].map(|l| equiv::w_obj::<FreeBmc>(&Word::leaf(l.to_string())));
    let alpha = s.vassoc(&a, &b, &c);
    let assoc_weak = alpha.source().key() != alpha.target().key();
    ensure(
        unit_weak && assoc_weak,
        format!(
            "key(X/I) = [{}] vs key(X) = [{}]; vassoc [{}] -> [{}]",
            xi.key(),
            x.key(),
            alpha.source().key(),
            alpha.target().key()
        ),
    )
}

// --- 8 -----------------------------------------------------------------------

fn c8_mutation() -> Verdicts {
    match eh_bichar(CrossingConvention::Mirrored) {
        Err(why) => Ok(format!("mirrored convention rejected: {why}")),
        Ok(_) => Err("mirrored convention still satisfies criterion 5".into()),
    }
}

// --- 9 -----------------------------------------------------------------------

fn c9_cli_determinism() -> Verdicts {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests");
    let fixture = |n: &str| root.join("fixtures").join(n).to_string_lossy().into_owned();
    let runs: Vec<(&str, Vec<String>)> = vec![
        (
            "empty_config.svg",
            vec!["render".into(), "config".into(), fixture("empty.json")],
        ),
        (
            "singleton_config.svg",
            vec!["render".into(), "config".into(), fixture("singleton.json")],
        ),
        (
            "x_config.svg",
            vec!["render".into(), "config".into(), fixture("X.json")],
        ),
        (
            "k_linearisation.svg",
            vec!["render".into(), "linearisation".into(), fixture("K.json")],
        ),
        (
            "braid_s1_s2inv_s1.svg",
            vec!["render".into(), "braid".into(), "n=3 s1 s2^-1 s1".into()],
        ),
        (
            "z_canon.txt",
            vec!["config".into(), "canon".into(), fixture("Z.json")],
        ),
        (
            "eh_bichar4.txt",
            ["sigma", "eh", "--category", "bichar:4", "--labels", "1,1"]
                .map(String::from)
                .to_vec(),
        ),
    ];
    for (golden, args) in &runs {
        let argv = || std::iter::once("sigmab".to_string()).chain(args.iter().cloned());
        let (first, second) = (sigmab_cli::run(argv()), sigmab_cli::run(argv()));
        if first != second {
            return Err(format!("{golden}: two runs differ"));
        }
        let expected = std::fs::read_to_string(root.join("golden").join(golden))
            .map_err(|e| format!("{golden}: {e}"))?;
        if first.stdout != expected {
            return Err(format!("{golden}: output differs from the golden file"));
        }
    }
    let laws = ["sigma", "laws", "--cases", "10"].map(String::from);
    let argv = || std::iter::once("sigmab".to_string()).chain(laws.iter().cloned());
    ensure(
        sigmab_cli::run(argv()) == sigmab_cli::run(argv()),
        format!(
            "{} golden outputs and a law report byte-stable across two runs",
            runs.len()
        ),
    )
}
