#![allow(dead_code)]

use std::io::Write;
use std::process::{Command, Stdio};

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one command in-process.
pub fn pred(args: &[&str], stdin: &str) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("pred").chain(args.iter().copied());
    let code = pred::run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Output { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

/// Runs one command as a child process of the built binary.
pub fn pred_process(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pred"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("pred binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let output = child.wait_with_output().unwrap();
    Output {
        code: output.status.code().unwrap_or(-1),
        stdout: String::from_utf8(output.stdout).unwrap(),
        stderr: String::from_utf8(output.stderr).unwrap(),
    }
}

/// Runs `a | b | c`, stopping at the first failing stage.
pub fn pipeline(run: fn(&[&str], &str) -> Output, stages: &[&[&str]]) -> Output {
    let mut last = Output { code: 0, stdout: String::new(), stderr: String::new() };
    for stage in stages {
        last = run(stage, &last.stdout);
        if last.code != 0 {
            break;
        }
    }
    last
}

fn split(command: &str) -> Vec<Vec<String>> {
    command.split(" | ").map(|stage| stage.split_whitespace().map(str::to_string).collect()).collect()
}

/// Pipelines whose stdout is frozen in `tests/golden/transcript.txt`.
pub fn golden_commands() -> Vec<String> {
    let mut commands: Vec<String> = [
        "create MIS --graph 0-1,1-2,2-3 | reduce - --to ILP | solve - --pretty",
        "create MIS --graph 0-1,1-2,2-3 | reduce - --to ILP | solve -",
        "create MIS --graph 0-1,1-2,2-3",
        "create MIS --graph 0-1,1-2,2-3 | reduce - --to ILP",
        "create MIS --graph 0-1,1-2,2-3 --weights 1,4,1,1 | solve - --pretty",
        "create MIS --graph 0-0",
        "create MIS --graph 0-1,x",
        "create Nope --graph 0-1",
        "create 3SAT --clauses 1,2,3;-1,2,-3 | reduce - --to ILP | solve - --pretty",
        "create SAT --clauses 1,2,3,4;-1,-2 | solve - --pretty",
        "create QUBO --matrix 2,-3,0;-3,1,2;0,2,-1 | solve - --pretty",
        "create SetCover --sets 0,1,2;2,3;3,4;0,4;1,3 | solve - --pretty",
        "create Coloring --graph 0-1,1-2,0-2 --colors 2 | solve - --pretty",
        "create DecisionMIS --graph 0-1,1-2,2-3 --bound 3 | solve - --pretty",
        "create 3SAT --example | reduce - --to MIS | reduce - --to ILP | solve - --pretty",
        "create ILP --example | reduce - --to MIS",
        "create ILP --example | solve - --pretty",
        "path 3SAT ILP",
        "path MIS ILP",
        "path MIS MIS",
        "path Coloring ILP",
        "path ILP MIS",
        "show MIS",
        "show ILP",
        "list",
        "list --stats",
        "create MIS --example | evaluate - --config 1,0,0,1",
        "create MIS --example | evaluate - --config 1,1,0,0",
        "create MIS --example | evaluate - --config 0,0,0,0",
        "create MIS --example | evaluate - --config 1,0",
        "examples",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    for e in pred_core::examples::database() {
        commands.push(format!("create {} --example | solve - --pretty", e.id));
    }
    commands
}

/// Stdout and exit code of every golden pipeline, in order.
pub fn golden_transcript(run: fn(&[&str], &str) -> Output) -> String {
    let mut transcript = String::new();
    for command in golden_commands() {
        let stages = split(&command);
        let stages: Vec<Vec<&str>> = stages.iter().map(|s| s.iter().map(String::as_str).collect()).collect();
        let refs: Vec<&[&str]> = stages.iter().map(Vec::as_slice).collect();
        let out = pipeline(run, &refs);
        let shown = command.replace(" | ", " | pred ");
        transcript += &format!("$ pred {shown}\n{}[exit {}]\n", out.stdout, out.code);
    }
    transcript
}

pub const GOLDEN_PATH: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/transcript.txt");
