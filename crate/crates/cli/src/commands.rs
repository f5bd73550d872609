use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use skewbrace::arith::is_prime;
use skewbrace::brace_file;
use skewbrace::enumeration::{
    small_group_catalog, Corpus, CorpusEntry, EnumError, MAX_CATALOG_ORDER,
};
use skewbrace::structure::{
    brace_is_supersoluble, hall_subbrace_bruteforce, hall_subbrace_constructive,
    sylow_subbrace_constructive, verify_theorems, Construction, ProofTrace, StructureError,
    TheoremReport,
};
use skewbrace::{ElemSet, SkewBrace};

use crate::output::{input_error, print_structured, Failure};
use crate::{Format, Options};

fn load(path: &Path) -> Result<SkewBrace, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    brace_file::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

pub fn verify(opts: &Options, file: &Path) -> Result<(), Failure> {
    let b = load(file)?;
    #[derive(Serialize)]
    struct Body {
        valid: bool,
        order: usize,
        additive_abelian: bool,
        multiplicative_abelian: bool,
        gamma_kernel: ElemSet,
    }
    let body = Body {
        valid: true,
        order: b.order(),
        additive_abelian: b.add_group().is_abelian(),
        multiplicative_abelian: b.mul_group().is_abelian(),
        gamma_kernel: b.gamma_kernel(),
    };
    match opts.format {
        Format::Structured => print_structured("verify", body),
        Format::Text => {
            println!("valid skew brace of order {}", body.order);
            println!("additive group abelian: {}", body.additive_abelian);
            println!(
                "multiplicative group abelian: {}",
                body.multiplicative_abelian
            );
            println!("kernel of gamma: {}", body.gamma_kernel);
        }
    }
    Ok(())
}

fn check_primes(primes: &[usize]) -> Result<Vec<usize>, Failure> {
    if let Some(p) = primes.iter().find(|&&p| !is_prime(p)) {
        return Err(Failure::Input(format!("{p} is not a prime")));
    }
    let mut primes = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();
    Ok(primes)
}

pub fn sylow(opts: &Options, p: usize, file: &Path) -> Result<(), Failure> {
    let primes = check_primes(&[p])?;
    let b = load(file)?;
    subbrace(opts, "sylow", &b, &primes, |b| {
        sylow_subbrace_constructive(b, p)
    })
}

pub fn hall(opts: &Options, primes: &[usize], file: &Path) -> Result<(), Failure> {
    let primes = check_primes(primes)?;
    let b = load(file)?;
    subbrace(opts, "hall", &b, &primes, |b| {
        hall_subbrace_constructive(b, &primes)
    })
}

#[derive(Serialize)]
struct SubBraceBody<'a> {
    primes: &'a [usize],
    method: &'static str,
    result: Option<ElemSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<ProofTrace>,
}

fn subbrace(
    opts: &Options,
    command: &str,
    b: &SkewBrace,
    primes: &[usize],
    construct: impl FnOnce(&SkewBrace) -> Result<Construction, StructureError>,
) -> Result<(), Failure> {
    if opts.brute_force {
        let result = hall_subbrace_bruteforce(b, primes);
        match opts.format {
            Format::Structured => print_structured(
                command,
                SubBraceBody {
                    primes,
                    method: "brute-force",
                    result: result.clone(),
                    trace: None,
                },
            ),
            Format::Text => match &result {
                Some(s) => println!("{s}"),
                None => println!("none"),
            },
        }
        return match result {
            Some(_) => Ok(()),
            None => Err(Failure::Negative(Some(format!(
                "no sub-skew brace for primes {primes:?}"
            )))),
        };
    }
    match construct(b) {
        Ok(c) => {
            match opts.format {
                Format::Structured => {
                    let trace = opts.trace.then(|| c.trace.clone());
                    print_structured(
                        command,
                        SubBraceBody {
                            primes,
                            method: "constructive",
                            result: Some(c.result.clone()),
                            trace,
                        },
                    )
                }
                Format::Text => {
                    println!("{}", c.result);
                    if opts.trace {
                        print!("{}", c.trace);
                    }
                }
            }
            Ok(())
        }
        Err(StructureError::NotSupersoluble) => {
            if opts.format == Format::Structured {
                print_structured(
                    command,
                    SubBraceBody {
                        primes,
                        method: "constructive",
                        result: None,
                        trace: None,
                    },
                );
            } else {
                println!("not supersoluble");
            }
            Err(Failure::Negative(Some(
                "the brace is not supersoluble, so the constructive algorithm does not apply; rerun with --brute-force"
                    .into(),
            )))
        }
        Err(e) => Err(Failure::Negative(Some(format!(
            "construction aborted: {e}"
        )))),
    }
}

pub fn supersoluble(opts: &Options, file: &Path) -> Result<(), Failure> {
    let b = load(file)?;
    let answer = brace_is_supersoluble(&b);
    #[derive(Serialize)]
    struct Body {
        supersoluble: bool,
    }
    match opts.format {
        Format::Structured => print_structured(
            "supersoluble",
            Body {
                supersoluble: answer,
            },
        ),
        Format::Text => println!("{answer}"),
    }
    if answer {
        Ok(())
    } else {
        Err(Failure::Negative(None))
    }
}

#[derive(Serialize)]
struct Tables {
    order: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
}

fn tables(b: &SkewBrace) -> Tables {
    Tables {
        order: b.order(),
        add: b.add_rows(),
        mul: b.mul_rows(),
    }
}

pub fn opposite(opts: &Options, file: &Path) -> Result<(), Failure> {
    let op = load(file)?.opposite();
    match opts.format {
        Format::Structured => print_structured("opposite", tables(&op)),
        Format::Text => print!("{}", brace_file::format(&op)),
    }
    Ok(())
}

fn catalog(order: usize) -> Result<Vec<skewbrace::enumeration::CatalogGroup>, Failure> {
    small_group_catalog(order).map_err(input_error)
}

pub fn enumerate(opts: &Options, order: usize, group: Option<&str>) -> Result<(), Failure> {
    let mut groups = catalog(order)?;
    if let Some(name) = group {
        groups.retain(|g| g.name == name);
        if groups.is_empty() {
            return Err(Failure::Input(format!(
                "no catalog group named `{name}` of order {order}"
            )));
        }
    }
    let per_group: Vec<Vec<CorpusEntry>> = groups
        .par_iter()
        .map(Corpus::for_group)
        .collect::<Result<_, EnumError>>()
        .map_err(input_error)?;

    #[derive(Serialize)]
    struct Entry {
        index: usize,
        mul: Vec<Vec<usize>>,
    }
    #[derive(Serialize)]
    struct Group {
        name: String,
        count: usize,
        add: Vec<Vec<usize>>,
        braces: Vec<Entry>,
    }
    match opts.format {
        Format::Structured => {
            let body: Vec<Group> = groups
                .iter()
                .zip(&per_group)
                .map(|(g, entries)| Group {
                    name: g.name.clone(),
                    count: entries.len(),
                    add: g.group.rows(),
                    braces: entries
                        .iter()
                        .map(|e| Entry {
                            index: e.index,
                            mul: e.brace.mul_rows(),
                        })
                        .collect(),
                })
                .collect();
            #[derive(Serialize)]
            struct Body {
                order: usize,
                groups: Vec<Group>,
            }
            print_structured(
                "enumerate",
                Body {
                    order,
                    groups: body,
                },
            );
        }
        Format::Text => {
            for (g, entries) in groups.iter().zip(&per_group) {
                println!("# {}: {} skew braces", g.name, entries.len());
                for e in entries {
                    println!("# {}", e.file_name());
                    print!("{}", brace_file::format(&e.brace));
                }
            }
        }
    }
    Ok(())
}

fn brace_files(path: &Path) -> Result<Vec<PathBuf>, Failure> {
    if !path.is_dir() {
        return Ok(vec![path.to_path_buf()]);
    }
    let mut files: Vec<PathBuf> = fs::read_dir(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "brace"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(Failure::Input(format!(
            "{}: no .brace files",
            path.display()
        )));
    }
    Ok(files)
}

pub fn check_theorems(opts: &Options, path: &Path) -> Result<(), Failure> {
    let files = brace_files(path)?;
    let braces: Vec<SkewBrace> = files.iter().map(|f| load(f)).collect::<Result<_, _>>()?;
    let reports: Vec<TheoremReport> = braces.par_iter().map(verify_theorems).collect();
    let failed = reports.iter().filter(|r| !r.all_passed()).count();
    let supersoluble = reports.iter().filter(|r| r.supersoluble).count();

    #[derive(Serialize)]
    struct FileReport<'a> {
        file: String,
        #[serde(flatten)]
        report: &'a TheoremReport,
        all_passed: bool,
    }
    #[derive(Serialize)]
    struct Body<'a> {
        braces: usize,
        supersoluble: usize,
        failed: usize,
        reports: Vec<FileReport<'a>>,
    }
    match opts.format {
        Format::Structured => {
            let reports = files
                .iter()
                .zip(&reports)
                .map(|(f, r)| FileReport {
                    file: f.display().to_string(),
                    report: r,
                    all_passed: r.all_passed(),
                })
                .collect();
            print_structured(
                "check-theorems",
                Body {
                    braces: files.len(),
                    supersoluble,
                    failed,
                    reports,
                },
            );
        }
        Format::Text => {
            for (f, r) in files.iter().zip(&reports) {
                println!("{}: {r}", f.display());
            }
            println!(
                "{} braces, {supersoluble} supersoluble, {failed} with failed checks",
                files.len()
            );
        }
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Negative(Some(format!(
            "{failed} braces failed a check"
        ))))
    }
}

pub fn corpus(opts: &Options, max_order: usize, out: &Path) -> Result<(), Failure> {
    if max_order == 0 || max_order > MAX_CATALOG_ORDER {
        return Err(Failure::Input(format!(
            "--max-order must be between 1 and {MAX_CATALOG_ORDER}"
        )));
    }
    let groups: Vec<_> = (1..=max_order)
        .map(catalog)
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    let results: Vec<Result<Vec<CorpusEntry>, EnumError>> =
        groups.par_iter().map(Corpus::for_group).collect();
    fs::create_dir_all(out).map_err(|e| Failure::Input(format!("{}: {e}", out.display())))?;

    let mut written = Vec::new();
    let mut skipped = Vec::new();
    for (g, result) in groups.iter().zip(results) {
        match result {
            Ok(entries) => {
                for e in entries {
                    let path = out.join(e.file_name());
                    fs::write(&path, brace_file::format(&e.brace))
                        .map_err(|err| Failure::Input(format!("{}: {err}", path.display())))?;
                    written.push(e.file_name());
                }
            }
            Err(e @ EnumError::TooLarge { .. }) => skipped.push(format!("{}: {e}", g.name)),
            Err(e) => return Err(input_error(e)),
        }
    }

    #[derive(Serialize)]
    struct Body<'a> {
        directory: String,
        written: &'a [String],
        skipped: &'a [String],
    }
    match opts.format {
        Format::Structured => print_structured(
            "corpus",
            Body {
                directory: out.display().to_string(),
                written: &written,
                skipped: &skipped,
            },
        ),
        Format::Text => {
            println!("wrote {} brace files to {}", written.len(), out.display());
            for s in &skipped {
                println!("skipped {s}");
            }
        }
    }
    Ok(())
}
