//! Helpers shared by the integration targets.
#![allow(dead_code)]

use std::io::{Read, Write};
use std::net::{SocketAddr, TcpStream};
use std::sync::Arc;

use synfix::server::{self, AppState};
use synfix_core::bpe::{self, SubtokenVocab};
use synfix_core::editdsl::{EditCommand, FixVocab, Payload};
use synfix_neural::EncoderConfig;
use synfix_repair::linefix::LineFixModel;
use synfix_repair::Models;

pub const MULTIPLICATION: &str = "import java.util.Scanner; \npublic class Multiplication\n{\n\tpublic static void main(String[] args){\n\t\tScanner sc = new Scanner(System.in);\n\t\tint a = sc.nextInt();\n\t\tint b = sc.nextInt();\n\t\tint res = a x b;\n\t\tSystem.out.println(\"The result is: \" + res);\n\t}\n}\n";

/// Raw HTTP/1.1 request; returns the status code and body.
pub fn http(addr: SocketAddr, method: &str, path: &str, body: &[u8]) -> (u16, String) {
    let mut s = TcpStream::connect(addr).expect("connect");
    let head = format!(
        "{method} {path} HTTP/1.1\r\nHost: {addr}\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n",
        body.len()
    );
    s.write_all(head.as_bytes()).unwrap();
    s.write_all(body).unwrap();
    let mut raw = Vec::new();
    // the server may close before reading an oversized body
    let _ = s.read_to_end(&mut raw);
    let text = String::from_utf8_lossy(&raw).into_owned();
    let code = text.split(' ').nth(1).and_then(|c| c.parse().ok()).unwrap_or(0);
    let (headers, rest) = text.split_once("\r\n\r\n").unwrap_or((&text, ""));
    let body = if headers.to_ascii_lowercase().contains("transfer-encoding: chunked") { dechunk(rest) } else { rest.to_string() };
    (code, body)
}

fn dechunk(mut s: &str) -> String {
    let mut out = String::new();
    while let Some((size, rest)) = s.split_once("\r\n") {
        let n = usize::from_str_radix(size.trim(), 16).unwrap_or(0);
        if n == 0 {
            break;
        }
        out.push_str(&rest[..n]);
        s = &rest[n + 2..];
    }
    out
}

/// Serve `state` on an ephemeral port from a background runtime.
pub fn start(state: Arc<AppState>) -> SocketAddr {
    let (tx, rx) = std::sync::mpsc::channel();
    std::thread::spawn(move || {
        let rt = tokio::runtime::Runtime::new().unwrap();
        rt.block_on(async move {
            let listener = tokio::net::TcpListener::bind("127.0.0.1:0").await.unwrap();
            tx.send(listener.local_addr().unwrap()).unwrap();
            axum::serve(listener, server::router(state)).await.unwrap();
        });
    });
    rx.recv().unwrap()
}

pub fn small_vocab() -> SubtokenVocab {
    bpe::train_vocab([MULTIPLICATION], 300, 0).unwrap()
}

/// A tiny LineFix model whose head biases force "change token 5 to `*`".
pub fn rigged_models() -> Models {
    let vocab = small_vocab();
    let cmds = [EditCommand::Change(Payload::Token("*".into())), EditCommand::Insert(Payload::Token(";".into()))];
    let fixes = FixVocab::derive(cmds.iter(), 8).unwrap();
    let star = fixes.index_of(&cmds[0]).unwrap();
    let mut lf = LineFixModel::new(EncoderConfig::tiny(vocab.size(), 9), fixes, true).unwrap();
    let p = &mut lf.model.params;
    let loc = p.id("head.loc.b").unwrap();
    for (i, b) in p.get_mut(loc).data.iter_mut().enumerate() {
        *b = if i == 5 { 20.0 } else { -20.0 };
    }
    let fix = p.id("head.fix.b").unwrap();
    for (i, b) in p.get_mut(fix).data.iter_mut().enumerate() {
        *b = if i == star { 20.0 } else { -20.0 };
    }
    Models { vocab, linefix: Some(lf), mlm: None }
}
