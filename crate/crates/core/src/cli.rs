//! Command-line front end. Every subcommand wraps one library operation and
//! prints a JSON report (or a plain key/value table with `--format table`).
//!
//! Exit codes: 0 success, 1 domain error (error JSON on stdout), 2 usage error.

use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::action::{
    apply_word, collision_scan, compare_on_probes, rack_pair, recover_invariants, validate_pair_on,
    virtual_rack_pair, ActionPair, CarrierPair, ScanOptions,
};
use crate::braid::{
    alphabet, enumerate_words, forgetful, parse_word, sigma_count, vb2_shortest_form,
    VirtualBraidWord,
};
use crate::error::{Error, Result};
use crate::freeshelf::{FreeShelf, SearchBudget};
use crate::gsd::{
    braided_coalgebra_check, braiding_of, covector, from_finite_shelf, from_group_algebra,
    from_leibniz, from_uaa, validate, GsdStructure,
};
use crate::homology::{
    check_identities, degeneracies_from_delta, gsd_faces, homology_of, normalized_complex,
    total_differential, Differential,
};
use crate::linrep::{
    assoc_braiding, burau_object, check_object, check_relations, garside_intertwiner_check,
    group_hopf_braiding, leibniz_braiding, rack_object, rho_word, twist, twisted_burau_object,
    yb_check, LinearBraidedObject, StructureConstants,
};
use crate::ring::RingMatrix;
use crate::sdstruct::{
    alexander_quandle, dihedral_quandle, vconj, Carrier, ConjFree, CyclicRack, EqDecision,
    FiniteGroup, FiniteRackTable,
};
use crate::tensor::LocalMap;

const STRUCTURES: &str =
    "Builtin structures: trivial1, dihedral<m>, alexander<m>,<t>, cyclic-rack, \
conj-free<n>, vconj<n>, free-shelf, free-virtual-shelf (set structures); burau, twisted-burau, \
uaa-dual-numbers, leibniz-solv2, group-s3 (linear objects). A path to a JSON file is accepted \
wherever a builtin is.";

const GRAMMARS: &str = "Grammars:
  word     whitespace-separated letters s<i> (sigma_i), S<i> (sigma_i inverse), z<i> (zeta_i);
           the rightmost letter acts first
  tuple    comma-separated elements; finite tables use 1..m, cyclic-rack uses integers,
           free shelves use terms built from x<k> and (t*t), free groups use words like x1 X2
  diff     sum of [+-][k*]ed and [+-][k*]de terms, e.g. \"ed-de\", \"2*ed+de\"
  cut      ones | counit | comma-separated integers (a covector)
Random sampling uses ChaCha8 seeded by --seed.";

#[derive(Debug, Parser)]
#[command(
    name = "vbraid",
    version,
    about = "Virtual braids, self-distributive structures and their homology"
)]
#[command(after_help = format!("{STRUCTURES}\n\n{GRAMMARS}"))]
pub struct Cli {
    /// Seed for the ChaCha8 generator used by sampling subcommands
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Rewrite-step budget for free-shelf equality
    #[arg(long, default_value_t = 8)]
    pub depth: usize,
    /// Visited-term budget for free-shelf equality
    #[arg(long, default_value_t = 100_000)]
    pub max_visited: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a rack table file: classification and action-pair identities
    ValidateRack { file: String },
    /// Classify a set structure (exhaustively for tables, on samples otherwise)
    Classify {
        #[arg(long)]
        structure: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Apply a word to a tuple
    Act {
        #[arg(long)]
        structure: String,
        #[arg(long)]
        word: String,
        #[arg(long)]
        tuple: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Forgetful permutation, sigma count and under-strand multisets of a positive word
    Invariants {
        #[arg(long)]
        word: String,
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Decide whether a structure's action separates two words on its probe tuples
    Distinguish {
        #[arg(long)]
        w1: String,
        #[arg(long)]
        w2: String,
        #[arg(long)]
        structure: String,
        #[arg(long)]
        strands: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Find word pairs whose actions agree on every probe tuple
    Scan {
        #[arg(long)]
        structure: String,
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        max_len: usize,
        /// Include inverse letters
        #[arg(long)]
        all_words: bool,
        /// Skip words that are not freely reduced
        #[arg(long)]
        reduced_only: bool,
        /// Also separate words by their underlying permutation
        #[arg(long)]
        forgetful: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Matrix of a word under a linear object
    Rho {
        #[arg(long)]
        object: String,
        #[arg(long)]
        word: String,
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Yang-Baxter, involutivity and relation checks of a linear object
    YbCheck {
        #[arg(long)]
        object: String,
        #[arg(long, default_value_t = 3)]
        strands: usize,
    },
    /// Twisted object and its laws
    Twist {
        #[arg(long)]
        object: String,
        #[arg(long, default_value_t = 3)]
        strands: usize,
    },
    /// Per-axiom report of a GSD structure
    GsdValidate { structure: String },
    /// Integral homology of a GSD structure
    Homology {
        #[arg(long)]
        structure: String,
        #[arg(long, default_value = "counit")]
        cut: String,
        #[arg(long, default_value = "ed-de")]
        diff: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        /// Quotient by the degenerate subcomplex
        #[arg(long)]
        normalized: bool,
        /// Also report the simplicial identities
        #[arg(long)]
        identities: bool,
    },
    /// List words in length-lexicographic order, or sample random ones
    Enumerate {
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        max_len: usize,
        /// Include inverse letters
        #[arg(long)]
        all_words: bool,
        /// Draw this many random words of length max-len instead
        #[arg(long)]
        sample: Option<usize>,
    },
}

/// A set structure chosen at run time.
pub enum SetStructure {
    Table(FiniteRackTable),
    Cyclic(CyclicRack),
    Conj(ConjFree),
    Free(FreeShelf),
}

macro_rules! with_carrier {
    ($s:expr, $c:ident => $body:expr) => {
        match $s {
            SetStructure::Table($c) => $body,
            SetStructure::Cyclic($c) => $body,
            SetStructure::Conj($c) => $body,
            SetStructure::Free($c) => $body,
        }
    };
}

fn read_json(path: &str) -> Result<Value> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Malformed(format!("{path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Error::Malformed(format!("{path}: {e}")))
}

fn is_file(name: &str) -> bool {
    name.ends_with(".json") || Path::new(name).is_file()
}

fn parse_num<T: std::str::FromStr>(s: &str, what: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::Parse(format!("bad {what} {s:?}")))
}

fn finite_builtin(name: &str) -> Result<Option<FiniteRackTable>> {
    if name == "trivial1" {
        return Ok(Some(FiniteRackTable::from_fn(1, |_, _| 0)?));
    }
    if let Some(m) = name.strip_prefix("dihedral") {
        return Ok(Some(dihedral_quandle(parse_num(m, "modulus")?)?));
    }
    if let Some(rest) = name.strip_prefix("alexander") {
        let (m, t) = rest
            .split_once(',')
            .ok_or_else(|| Error::Parse("expected alexander<m>,<t>".into()))?;
        return Ok(Some(alexander_quandle(
            parse_num(m, "modulus")?,
            parse_num(t, "t")?,
        )?));
    }
    Ok(None)
}

pub fn set_structure(name: &str, budget: SearchBudget) -> Result<SetStructure> {
    if is_file(name) {
        return Ok(SetStructure::Table(FiniteRackTable::from_json(
            &read_json(name)?,
        )?));
    }
    if let Some(t) = finite_builtin(name)? {
        return Ok(SetStructure::Table(t));
    }
    Ok(match name {
        "cyclic-rack" => SetStructure::Cyclic(CyclicRack::new()),
        "free-shelf" => SetStructure::Free(FreeShelf::real().with_budget(budget)),
        "free-virtual-shelf" => SetStructure::Free(FreeShelf::virtual_shelf().with_budget(budget)),
        _ => {
            if let Some(n) = name.strip_prefix("conj-free") {
                SetStructure::Conj(ConjFree::new(parse_num(n, "rank")?))
            } else if let Some(n) = name.strip_prefix("vconj") {
                SetStructure::Conj(vconj(parse_num(n, "rank")?))
            } else {
                return Err(Error::Parse(format!("unknown set structure {name:?}")));
            }
        }
    })
}

fn object_from_json(v: &Value) -> Result<LinearBraidedObject> {
    if v.get("backend").is_some() {
        return braiding_of(&GsdStructure::from_json(v)?);
    }
    if v.get("op").is_some() {
        return Ok(rack_object(&FiniteRackTable::from_json(v)?));
    }
    let sc = StructureConstants::from_json(v)?;
    if sc.group.is_some() {
        Ok(group_hopf_braiding(&sc.finite_group()?))
    } else if sc.bracket.is_some() {
        leibniz_braiding(&sc)
    } else {
        assoc_braiding(&sc)
    }
}

pub fn linear_object(name: &str) -> Result<LinearBraidedObject> {
    if is_file(name) {
        return object_from_json(&read_json(name)?);
    }
    if let Some(t) = finite_builtin(name)? {
        return Ok(rack_object(&t));
    }
    match name {
        "burau" => Ok(burau_object()),
        "twisted-burau" => Ok(twisted_burau_object()),
        "uaa-dual-numbers" => assoc_braiding(&StructureConstants::dual_numbers()),
        "leibniz-solv2" => leibniz_braiding(&StructureConstants::solvable_leibniz()),
        "group-s3" => Ok(group_hopf_braiding(&FiniteGroup::symmetric3())),
        _ => Err(Error::Parse(format!("unknown linear object {name:?}"))),
    }
}

pub fn gsd_structure(name: &str) -> Result<GsdStructure> {
    if is_file(name) {
        return GsdStructure::from_json(&read_json(name)?);
    }
    if let Some(t) = finite_builtin(name)? {
        return from_finite_shelf(&t);
    }
    match name {
        "uaa-dual-numbers" => from_uaa(&StructureConstants::dual_numbers()),
        "leibniz-solv2" => from_leibniz(&StructureConstants::solvable_leibniz()),
        "group-s3" => from_group_algebra(&FiniteGroup::symmetric3()),
        _ => Err(Error::Parse(format!("unknown GSD structure {name:?}"))),
    }
}

fn cut_of(g: &GsdStructure, text: &str) -> Result<LocalMap> {
    match text {
        "counit" => g.counit().cloned().ok_or_else(|| {
            Error::Unsupported("structure has no counit; pass --cut explicitly".into())
        }),
        "ones" => covector(g.dim(), &vec![1; g.dim()]),
        _ => {
            let values = text
                .split(',')
                .map(|x| parse_num::<i64>(x.trim(), "cut entry"))
                .collect::<Result<Vec<_>>>()?;
            covector(g.dim(), &values)
        }
    }
}

fn strands_for(word: &str, given: Option<usize>) -> Result<usize> {
    if let Some(n) = given {
        return Ok(n);
    }
    let top = word
        .split_whitespace()
        .map(|tok| parse_num::<usize>(tok.get(1..).unwrap_or(""), "letter index"))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .unwrap_or(1);
    Ok(top + 1)
}

fn pair_of<C: Carrier>(c: C) -> Result<CarrierPair<C>> {
    if c.is_virtual() {
        virtual_rack_pair(c)
    } else {
        rack_pair(c)
    }
}

fn format_tuple<P: ActionPair>(pair: &P, t: &[P::Elem]) -> String {
    t.iter()
        .map(|x| pair.format_elem(x))
        .collect::<Vec<_>>()
        .join(",")
}

fn act_with<C: Carrier>(c: C, word: &str, tuple: &str) -> Result<Value> {
    let pair = pair_of(c)?;
    let elems = split_tuple(tuple)
        .iter()
        .map(|t| pair.parse_elem(t))
        .collect::<Result<Vec<_>>>()?;
    let w = parse_word(word, elems.len())?;
    let out = apply_word(&pair, &w, &elems)?;
    Ok(
        json!({ "word": w.to_string(), "input": format_tuple(&pair, &elems), "output": format_tuple(&pair, &out) }),
    )
}

/// Splits at top-level commas only, so terms like `(x0*x1)` stay whole.
fn split_tuple(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in text.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur.clear();
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    out.push(cur.trim().to_string());
    out
}

fn decision_name(d: EqDecision) -> &'static str {
    match d {
        EqDecision::Equal => "NotDistinguished",
        EqDecision::NotEqual => "Distinguished",
        EqDecision::Undecided => "Undecided",
    }
}

fn distinguish_with<C: Carrier>(c: C, w1: &str, w2: &str, n: usize) -> Result<Value> {
    let pair = pair_of(c)?;
    let (a, b) = (parse_word(w1, n)?, parse_word(w2, n)?);
    let probes = pair.probe_tuples(n);
    let mut witness = None;
    for p in &probes {
        if compare_on_probes(&pair, &a, &b, std::slice::from_ref(p))? == EqDecision::NotEqual {
            witness = Some(json!({
                "tuple": format_tuple(&pair, p),
                "w1": format_tuple(&pair, &apply_word(&pair, &a, p)?),
                "w2": format_tuple(&pair, &apply_word(&pair, &b, p)?),
            }));
            break;
        }
    }
    let decision = compare_on_probes(&pair, &a, &b, &probes)?;
    Ok(json!({
        "w1": a.to_string(),
        "w2": b.to_string(),
        "strands": n,
        "probes": probes.len(),
        "result": decision_name(decision),
        "witness": witness,
    }))
}

fn scan_with<C: Carrier>(c: C, n: usize, max_len: usize, opts: ScanOptions) -> Result<Value> {
    let pair = pair_of(c)?;
    let probes = pair.probe_tuples(n);
    let report = collision_scan(&pair, n, max_len, &probes, opts)?;
    Ok(json!({ "strands": n, "max_len": max_len, "probes": probes.len(), "report": report }))
}

fn sampled_classification<C: Carrier>(c: &C) -> Value {
    let s = c.samples();
    let s = &s[..s.len().min(8)];
    let eq = |a: &C::Elem, b: &C::Elem| c.decide_eq(a, b);
    let mut undecided = 0;
    let mut holds = |d: EqDecision| match d {
        EqDecision::Equal => true,
        EqDecision::NotEqual => false,
        EqDecision::Undecided => {
            undecided += 1;
            true
        }
    };
    let mut sd = true;
    for a in s {
        for b in s {
            for x in s {
                let l = c.op(&c.op(a, b), x);
                let r = c.op(&c.op(a, x), &c.op(b, x));
                sd &= holds(eq(&l, &r));
            }
        }
    }
    let mut idem = true;
    for a in s {
        idem &= holds(eq(&c.op(a, a), a));
    }
    let class = match (sd, c.has_inverse(), idem) {
        (false, _, _) => "not_shelf",
        (true, true, true) => "quandle",
        (true, true, false) => "rack",
        (true, false, true) => "spindle",
        (true, false, false) => "shelf",
    };
    json!({
        "structure": c.name(),
        "class": class,
        "virtual": c.is_virtual(),
        "exhaustive": false,
        "elements_checked": s.len(),
        "undecided": undecided,
    })
}

fn classify_structure(s: SetStructure) -> Value {
    match s {
        SetStructure::Table(t) => {
            let mut v = serde_json::to_value(t.classify()).expect("plain data");
            v["structure"] = json!(t.name());
            v["exhaustive"] = json!(true);
            v
        }
        other => with_carrier!(other, c => sampled_classification(&c)),
    }
}

fn matrix_value(m: &RingMatrix) -> Value {
    m.to_json()
}

fn run_command(cli: &Cli) -> Result<(Value, Option<String>)> {
    let budget_of = |b: &BudgetArgs| SearchBudget {
        depth: b.depth,
        max_visited: b.max_visited,
    };
    let v = match &cli.command {
        Command::ValidateRack { file } => {
            let t = FiniteRackTable::from_json(&read_json(file)?)?;
            let classification = t.classify();
            let samples = t.samples();
            let flip = validate_pair_on(
                &CarrierPair::unchecked(t.clone(), crate::action::XiKind::Flip),
                &samples,
            )?;
            let virt = if t.is_virtual() {
                let p = CarrierPair::unchecked(t.clone(), crate::action::XiKind::Virtual);
                Some(validate_pair_on(&p, &samples)?)
            } else {
                None
            };
            json!({ "size": t.size(), "classification": classification, "rack_pair": flip, "virtual_pair": virt })
        }
        Command::Classify { structure, budget } => {
            classify_structure(set_structure(structure, budget_of(budget))?)
        }
        Command::Act {
            structure,
            word,
            tuple,
            budget,
        } => {
            let s = set_structure(structure, budget_of(budget))?;
            let v = with_carrier!(s, c => act_with(c, word, tuple))?;
            let line = v["output"].as_str().map(str::to_string);
            return Ok((v, line));
        }
        Command::Invariants { word, strands } => {
            let w = parse_word(word, strands_for(word, *strands)?)?;
            let rec = recover_invariants(&w)?;
            let direct_perm = forgetful(&w);
            let shortest = if w.strands() == 2 {
                let f = vb2_shortest_form(&w)?;
                Some(json!({ "k": f.k, "exponents": f.exponents, "word": f.to_word().to_string() }))
            } else {
                None
            };
            json!({
                "word": w.to_string(),
                "strands": w.strands(),
                "recovered": rec,
                "forgetful_matches": rec.forgetful == direct_perm,
                "sigma_count_matches": rec.sigma_count == sigma_count(&w),
                "shortest_form": shortest,
            })
        }
        Command::Distinguish {
            w1,
            w2,
            structure,
            strands,
            budget,
        } => {
            let n = strands_for(&format!("{w1} {w2}"), *strands)?;
            let s = set_structure(structure, budget_of(budget))?;
            let v = with_carrier!(s, c => distinguish_with(c, w1, w2, n))?;
            let line = v["result"].as_str().map(str::to_string);
            return Ok((v, line));
        }
        Command::Scan {
            structure,
            strands,
            max_len,
            all_words,
            reduced_only,
            forgetful,
            budget,
        } => {
            let s = set_structure(structure, budget_of(budget))?;
            let opts = ScanOptions {
                positive: !all_words,
                reduced_only: *reduced_only,
                use_forgetful: *forgetful,
            };
            with_carrier!(s, c => scan_with(c, *strands, *max_len, opts))?
        }
        Command::Rho {
            object,
            word,
            strands,
        } => {
            let obj = linear_object(object)?;
            let w = parse_word(word, strands_for(word, *strands)?)?;
            let m = rho_word(&obj, &w)?;
            let text = m.to_string();
            return Ok((
                json!({ "word": w.to_string(), "matrix": matrix_value(&m) }),
                Some(text),
            ));
        }
        Command::YbCheck { object, strands } => {
            let obj = linear_object(object)?;
            let report = check_object(&obj)?;
            let relations = check_relations(&obj, *strands)?;
            json!({ "object": report, "passes": report.passes(), "relations": relations })
        }
        Command::Twist { object, strands } => {
            let obj = linear_object(object)?;
            let tw = twist(&obj)?;
            json!({
                "involution": twist(&tw)? == obj,
                "yang_baxter": yb_check(&tw)?,
                "garside_intertwiner": garside_intertwiner_check(&obj, *strands)?,
                "sigma": matrix_value(tw.sigma()),
                "sigma_inv": tw.sigma_inv().map(matrix_value),
            })
        }
        Command::GsdValidate { structure } => {
            let g = gsd_structure(structure)?;
            let report = validate(&g);
            let coalgebra = if report.is_shelf() {
                Some(braided_coalgebra_check(&g)?)
            } else {
                None
            };
            json!({
                "report": report,
                "shelf": report.is_shelf(),
                "rack": report.is_rack(),
                "spindle": report.is_spindle(),
                "failures": report.failures(),
                "braided_coalgebra": coalgebra,
            })
        }
        Command::Homology {
            structure,
            cut,
            diff,
            max_degree,
            normalized,
            identities,
        } => {
            let g = gsd_structure(structure)?;
            let eps = cut_of(&g, cut)?;
            let which: Differential = diff.parse()?;
            let mut complex = gsd_faces(&g, &eps, max_degree + 1)?;
            if *normalized || *identities {
                complex = degeneracies_from_delta(complex, &braiding_of(&g)?, g.delta())?;
            }
            let mut chain = total_differential(&complex, which)?;
            if *normalized {
                chain = normalized_complex(&complex, &chain)?;
            }
            let h = homology_of(&chain)?;
            let mut v =
                json!({ "differential": which, "normalized": normalized, "degrees": h.degrees });
            if *identities {
                v["identities"] =
                    serde_json::to_value(check_identities(&complex)).expect("plain data");
            }
            v
        }
        Command::Enumerate {
            strands,
            max_len,
            all_words,
            sample,
        } => {
            let words: Vec<String> = match sample {
                None => enumerate_words(*strands, *max_len, !all_words)
                    .map(|w| w.to_string())
                    .collect(),
                Some(k) => {
                    let letters = alphabet(*strands, !all_words);
                    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                    (0..*k)
                        .map(|_| {
                            let ls = (0..*max_len)
                                .map(|_| letters[rng.gen_range(0..letters.len())])
                                .collect();
                            VirtualBraidWord::new(*strands, ls).map(|w| w.to_string())
                        })
                        .collect::<Result<_>>()?
                }
            };
            json!({ "strands": strands, "count": words.len(), "words": words })
        }
    };
    Ok((v, None))
}

fn table_lines(prefix: &str, v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                table_lines(&key, x, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object()) => {
            for (i, x) in items.iter().enumerate() {
                table_lines(&format!("{prefix}[{i}]"), x, out);
            }
        }
        Value::String(s) => out.push(format!("{prefix}\t{s}")),
        other => out.push(format!("{prefix}\t{other}")),
    }
}

fn render(v: &Value, line: Option<String>, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(v).expect("json"),
        Format::Table => line.unwrap_or_else(|| {
            let mut out = Vec::new();
            table_lines("", v, &mut out);
            out.join("\n")
        }),
    }
}

/// Runs the CLI on `argv` (including the program name) and returns the exit
/// code together with everything meant for stdout.
pub fn run_to_string<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    match run_command(&cli) {
        Ok((v, line)) => (0, render(&v, line, cli.format)),
        Err(e) => {
            let v = json!({ "error": { "kind": e.kind(), "message": e.to_string() } });
            (1, serde_json::to_string_pretty(&v).expect("json"))
        }
    }
}

pub fn main() -> i32 {
    let (code, out) = run_to_string(std::env::args_os());
    // a closed pipe is not an error worth reporting
    let _ = if code == 2 {
        writeln!(std::io::stderr(), "{out}")
    } else {
        writeln!(std::io::stdout(), "{out}")
    };
    code
}
