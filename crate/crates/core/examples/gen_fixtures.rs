//! Writes the fixture corpus of small student-style Java programs.
//!
//! Usage: cargo run -p synfix-core --example gen_fixtures -- <out-dir> [count] [seed]

use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Style {
    indent: &'static str,
    allman: bool,
}

struct Gen {
    rng: ChaCha8Rng,
    style: Style,
}

const CLASS_NAMES: &[&str] = &[
    "Calculator", "GradeBook", "Shapes", "Temperature", "BankAccount", "Inventory", "Lab", "Exercise", "Practice",
    "Homework", "Counter", "Matrix", "Library", "Game", "Statistics", "Converter", "Student", "Numbers", "Patterns",
    "Primes", "Loops", "Arrays", "Strings", "Recursion", "Quiz",
];

fn pick<'a>(rng: &mut ChaCha8Rng, xs: &[&'a str]) -> &'a str {
    xs.choose(rng).unwrap()
}

/// A method: its text lines (unindented, nesting expressed by leading tabs)
/// plus a statement that calls it from `main`.
struct Method {
    lines: Vec<String>,
    call: Vec<String>,
    needs: &'static [&'static str],
}

impl Gen {
    fn open(&self, header: &str, depth: usize, out: &mut Vec<String>) {
        let pad = self.style.indent.repeat(depth);
        if self.style.allman {
            out.push(format!("{pad}{header}"));
            out.push(format!("{pad}{{"));
        } else {
            out.push(format!("{pad}{header} {{"));
        }
    }

    fn close(&self, depth: usize, out: &mut Vec<String>) {
        out.push(format!("{}}}", self.style.indent.repeat(depth)));
    }

    /// Render lines where `{` at the end opens and a lone `}` closes.
    fn render(&self, lines: &[String], base: usize, out: &mut Vec<String>) {
        let mut depth = base;
        for l in lines {
            if l == "}" {
                depth -= 1;
                self.close(depth, out);
            } else if let Some(h) = l.strip_prefix("} ").and_then(|r| r.strip_suffix(" {")) {
                // `} else {` style continuation
                depth -= 1;
                if self.style.allman {
                    self.close(depth, out);
                    self.open(h, depth, out);
                } else {
                    out.push(format!("{}}} {h} {{", self.style.indent.repeat(depth)));
                }
                depth += 1;
            } else if let Some(h) = l.strip_suffix(" {") {
                self.open(h, depth, out);
                depth += 1;
            } else {
                out.push(format!("{}{l}", self.style.indent.repeat(depth)));
            }
        }
    }

    fn num(&mut self, lo: i32, hi: i32) -> i32 {
        self.rng.gen_range(lo..=hi)
    }

    fn methods(&mut self) -> Vec<Method> {
        let r = &mut self.rng;
        let arr = pick(r, &["values", "nums", "data", "arr", "scores"]);
        let acc = pick(r, &["total", "sum", "result", "acc"]);
        let idx = pick(r, &["i", "j", "k", "idx"]);
        let s = |v: &str| v.to_string();
        let mut out = Vec::new();

        let name = pick(r, &["sumArray", "addAll", "totalOf"]);
        out.push(Method {
            lines: vec![
                format!("public static int {name}(int[] {arr}) {{"),
                format!("int {acc} = 0;"),
                format!("for (int {idx} = 0; {idx} < {arr}.length; {idx}++) {{"),
                format!("{acc} += {arr}[{idx}];"),
                s("}"),
                format!("return {acc};"),
                s("}"),
            ],
            call: vec![format!("System.out.println(\"Sum: \" + {name}(numbers));")],
            needs: &["numbers"],
        });

        let name = pick(r, &["findMax", "largest", "maxValue"]);
        let best = pick(r, &["best", "max", "biggest"]);
        out.push(Method {
            lines: vec![
                format!("static int {name}(int[] {arr}) {{"),
                format!("int {best} = {arr}[0];"),
                format!("for (int {idx} = 1; {idx} < {arr}.length; {idx}++) {{"),
                format!("if ({arr}[{idx}] > {best}) {{"),
                format!("{best} = {arr}[{idx}];"),
                s("}"),
                s("}"),
                format!("return {best};"),
                s("}"),
            ],
            call: vec![format!("int top = {name}(numbers);"), s("System.out.println(\"Max is \" + top);")],
            needs: &["numbers"],
        });

        let name = pick(r, &["factorial", "fact"]);
        let p = pick(r, &["n", "num", "x"]);
        out.push(Method {
            lines: vec![
                format!("public static long {name}(int {p}) {{"),
                format!("if ({p} <= 1) {{"),
                s("return 1;"),
                s("}"),
                format!("return {p} * {name}({p} - 1);"),
                s("}"),
            ],
            call: vec![format!("System.out.println({name}({}));", self.num(3, 12))],
            needs: &[],
        });

        let r = &mut self.rng;
        let name = pick(r, &["isPrime", "checkPrime", "prime"]);
        let d = pick(r, &["d", "div", "factor"]);
        out.push(Method {
            lines: vec![
                format!("static boolean {name}(int {p}) {{"),
                format!("if ({p} < 2) {{"),
                s("return false;"),
                s("}"),
                format!("int {d} = 2;"),
                format!("while ({d} * {d} <= {p}) {{"),
                format!("if ({p} % {d} == 0) {{"),
                s("return false;"),
                s("}"),
                format!("{d}++;"),
                s("}"),
                s("return true;"),
                s("}"),
            ],
            call: vec![
                format!("for (int q = 2; q < {}; q++) {{", self.num(10, 40)),
                format!("if ({name}(q)) {{"),
                s("System.out.print(q + \" \");"),
                s("}"),
                s("}"),
                s("System.out.println();"),
            ],
            needs: &[],
        });

        let r = &mut self.rng;
        let name = pick(r, &["average", "mean", "computeAverage"]);
        out.push(Method {
            lines: vec![
                format!("public static double {name}(int[] {arr}) {{"),
                format!("double {acc} = 0;"),
                format!("for (int v : {arr}) {{"),
                format!("{acc} = {acc} + v;"),
                s("}"),
                format!("return {acc} / {arr}.length;"),
                s("}"),
            ],
            call: vec![format!("double avg = {name}(numbers);"), s("System.out.println(\"Average: \" + avg);")],
            needs: &["numbers"],
        });

        let name = pick(r, &["countVowels", "vowels"]);
        let text = pick(r, &["text", "word", "line", "input"]);
        let count = pick(r, &["count", "found", "c"]);
        out.push(Method {
            lines: vec![
                format!("static int {name}(String {text}) {{"),
                format!("int {count} = 0;"),
                format!("for (int {idx} = 0; {idx} < {text}.length(); {idx}++) {{"),
                format!("char ch = Character.toLowerCase({text}.charAt({idx}));"),
                s("switch (ch) {"),
                s("case 'a':"),
                s("case 'e':"),
                s("case 'i':"),
                s("case 'o':"),
                s("case 'u':"),
                format!("{count}++;"),
                s("break;"),
                s("default:"),
                s("break;"),
                s("}"),
                s("}"),
                format!("return {count};"),
                s("}"),
            ],
            call: vec![format!("System.out.println({name}(\"{}\"));", pick(r, &["programming", "hello world", "banana"]))],
            needs: &[],
        });

        let name = pick(r, &["reverse", "reversed", "backwards"]);
        let sb = pick(r, &["sb", "builder", "out"]);
        out.push(Method {
            lines: vec![
                format!("public static String {name}(String {text}) {{"),
                format!("StringBuilder {sb} = new StringBuilder();"),
                format!("for (int {idx} = {text}.length() - 1; {idx} >= 0; {idx}--) {{"),
                format!("{sb}.append({text}.charAt({idx}));"),
                s("}"),
                format!("return {sb}.toString();"),
                s("}"),
            ],
            call: vec![format!("String rev = {name}(\"{}\");", pick(r, &["java", "stressed", "level"])), s("System.out.println(rev);")],
            needs: &[],
        });

        let name = pick(r, &["fibonacci", "fib"]);
        let (a, b) = *[("a", "b"), ("prev", "curr"), ("first", "second")].choose(r).unwrap();
        out.push(Method {
            lines: vec![
                format!("static int {name}(int {p}) {{"),
                format!("int {a} = 0;"),
                format!("int {b} = 1;"),
                format!("for (int {idx} = 0; {idx} < {p}; {idx}++) {{"),
                format!("int next = {a} + {b};"),
                format!("{a} = {b};"),
                format!("{b} = next;"),
                s("}"),
                format!("return {a};"),
                s("}"),
            ],
            call: vec![format!("System.out.println(\"Fib: \" + {name}({}));", self.num(5, 20))],
            needs: &[],
        });

        let r = &mut self.rng;
        let name = pick(r, &["printTriangle", "drawStars", "pattern"]);
        let rows = pick(r, &["rows", "height", "size"]);
        out.push(Method {
            lines: vec![
                format!("public static void {name}(int {rows}) {{"),
                format!("for (int row = 1; row <= {rows}; row++) {{"),
                s("for (int col = 0; col < row; col++) {"),
                s("System.out.print(\"*\");"),
                s("}"),
                s("System.out.println();"),
                s("}"),
                s("}"),
            ],
            call: vec![format!("{name}({});", self.num(3, 6))],
            needs: &[],
        });

        let r = &mut self.rng;
        let name = pick(r, &["gcd", "greatestDivisor"]);
        out.push(Method {
            lines: vec![
                format!("static int {name}(int a, int b) {{"),
                s("while (b != 0) {"),
                s("int t = b;"),
                s("b = a % b;"),
                s("a = t;"),
                s("}"),
                s("return a;"),
                s("}"),
            ],
            call: vec![format!("System.out.println(\"GCD: \" + {name}({}, {}));", self.num(12, 90), self.num(6, 60))],
            needs: &[],
        });

        let r = &mut self.rng;
        let name = pick(r, &["bmi", "bodyMassIndex", "computeBmi"]);
        let (w, h) = *[("weight", "height"), ("wgt", "hgt"), ("kg", "meters")].choose(r).unwrap();
        out.push(Method {
            lines: vec![
                format!("public static double {name}(double {w}, double {h}) {{"),
                format!("double value = {w} / Math.pow({h}, 2);"),
                s("return Math.round(value * 10) / 10.0;"),
                s("}"),
            ],
            call: vec![format!("System.out.println(\"BMI: \" + {name}({}.5, 1.{}));", self.num(50, 90), self.num(55, 95))],
            needs: &[],
        });

        let r = &mut self.rng;
        let name = pick(r, &["letterGrade", "grade", "toLetter"]);
        let score = pick(r, &["score", "mark", "points"]);
        out.push(Method {
            lines: vec![
                format!("static char {name}(int {score}) {{"),
                format!("if ({score} >= 90) {{"),
                s("return 'A';"),
                format!("}} else if ({score} >= 80) {{"),
                s("return 'B';"),
                format!("}} else if ({score} >= 70) {{"),
                s("return 'C';"),
                s("} else {"),
                s("return 'F';"),
                s("}"),
                s("}"),
            ],
            call: vec![format!("System.out.println(\"Grade: \" + {name}({}));", self.num(40, 100))],
            needs: &[],
        });

        let r = &mut self.rng;
        let name = pick(r, &["indexOf", "search", "find"]);
        let target = pick(r, &["target", "key", "wanted"]);
        out.push(Method {
            lines: vec![
                format!("public static int {name}(int[] {arr}, int {target}) {{"),
                format!("for (int {idx} = 0; {idx} < {arr}.length; {idx}++) {{"),
                format!("if ({arr}[{idx}] == {target}) {{"),
                format!("return {idx};"),
                s("}"),
                s("}"),
                s("return -1;"),
                s("}"),
            ],
            call: vec![format!("int pos = {name}(numbers, {});", self.num(1, 9)), s("System.out.println(\"Found at \" + pos);")],
            needs: &["numbers"],
        });

        let r = &mut self.rng;
        let name = pick(r, &["bubbleSort", "sort", "sortArray"]);
        let tmp = pick(r, &["temp", "tmp", "swap"]);
        out.push(Method {
            lines: vec![
                format!("static void {name}(int[] {arr}) {{"),
                format!("for (int {idx} = 0; {idx} < {arr}.length - 1; {idx}++) {{"),
                format!("for (int m = 0; m < {arr}.length - 1 - {idx}; m++) {{"),
                format!("if ({arr}[m] > {arr}[m + 1]) {{"),
                format!("int {tmp} = {arr}[m];"),
                format!("{arr}[m] = {arr}[m + 1];"),
                format!("{arr}[m + 1] = {tmp};"),
                s("}"),
                s("}"),
                s("}"),
                s("}"),
            ],
            call: vec![format!("{name}(numbers);"), s("System.out.println(Arrays.toString(numbers));")],
            needs: &["numbers", "import java.util.Arrays;"],
        });

        let r = &mut self.rng;
        let name = pick(r, &["toFahrenheit", "convert", "celsiusToF"]);
        let c = pick(r, &["celsius", "c", "degrees"]);
        out.push(Method {
            lines: vec![
                format!("public static double {name}(double {c}) {{"),
                format!("return {c} * 9 / 5 + 32;"),
                s("}"),
            ],
            call: vec![format!("System.out.println({name}({}.0));", self.num(-10, 40))],
            needs: &[],
        });

        let r = &mut self.rng;
        let name = pick(r, &["evens", "collectEven", "filterEven"]);
        let list = pick(r, &["list", "result", "items"]);
        out.push(Method {
            lines: vec![
                format!("static ArrayList<Integer> {name}(int[] {arr}) {{"),
                format!("ArrayList<Integer> {list} = new ArrayList<>();"),
                format!("for (int v : {arr}) {{"),
                s("if (v % 2 == 0) {"),
                format!("{list}.add(v);"),
                s("}"),
                s("}"),
                format!("return {list};"),
                s("}"),
            ],
            call: vec![format!("ArrayList<Integer> even = {name}(numbers);"), s("System.out.println(even.size() + \" even numbers\");")],
            needs: &["numbers", "import java.util.ArrayList;"],
        });

        let r = &mut self.rng;
        let name = pick(r, &["parseOrZero", "safeParse", "toNumber"]);
        out.push(Method {
            lines: vec![
                format!("public static int {name}(String {text}) {{"),
                s("try {"),
                format!("return Integer.parseInt({text}.trim());"),
                s("} catch (NumberFormatException e) {"),
                s("System.out.println(\"Not a number: \" + e.getMessage());"),
                s("return 0;"),
                s("}"),
                s("}"),
            ],
            call: vec![format!("int parsed = {name}(\"{}\");", pick(r, &["42", "abc", " 7 "])), s("System.out.println(parsed);")],
            needs: &[],
        });

        let r = &mut self.rng;
        let name = pick(r, &["countdown", "countDown", "launch"]);
        let left = pick(r, &["left", "remaining", "n"]);
        out.push(Method {
            lines: vec![
                format!("static void {name}(int {left}) {{"),
                s("do {"),
                format!("System.out.println({left});"),
                format!("{left}--;"),
                format!("}} while ({left} > 0);"),
                s("System.out.println(\"Go!\");"),
                s("}"),
            ],
            call: vec![format!("{name}({});", self.num(3, 5))],
            needs: &[],
        });

        let r = &mut self.rng;
        let name = pick(r, &["absolute", "abs", "magnitude"]);
        out.push(Method {
            lines: vec![
                format!("public static int {name}(int {p}) {{"),
                format!("return {p} < 0 ? -{p} : {p};"),
                s("}"),
            ],
            call: vec![format!("System.out.println({name}({}));", self.num(-50, 50))],
            needs: &[],
        });

        let r = &mut self.rng;
        let name = pick(r, &["isEven", "even", "divisibleByTwo"]);
        out.push(Method {
            lines: vec![format!("static boolean {name}(int {p}) {{"), format!("return {p} % 2 == 0;"), s("}")],
            call: vec![
                format!("if ({name}({})) {{", self.num(1, 30)),
                s("System.out.println(\"even\");"),
                s("} else {"),
                s("System.out.println(\"odd\");"),
                s("}"),
            ],
            needs: &[],
        });

        let r = &mut self.rng;
        let name = pick(r, &["power", "raise", "pow"]);
        let (base, exp) = *[("base", "exp"), ("b", "e"), ("x", "n")].choose(r).unwrap();
        out.push(Method {
            lines: vec![
                format!("static double {name}(double {base}, int {exp}) {{"),
                s("double result = 1;"),
                format!("for (int {idx} = 0; {idx} < {exp}; {idx}++) {{"),
                format!("result *= {base};"),
                s("}"),
                s("return result;"),
                s("}"),
            ],
            call: vec![format!("System.out.println({name}(2, {}));", self.num(2, 10))],
            needs: &[],
        });

        let r = &mut self.rng;
        let name = pick(r, &["sumDigits", "digitSum"]);
        out.push(Method {
            lines: vec![
                format!("public static int {name}(int {p}) {{"),
                format!("int {acc} = 0;"),
                format!("while ({p} > 0) {{"),
                format!("{acc} += {p} % 10;"),
                format!("{p} /= 10;"),
                s("}"),
                format!("return {acc};"),
                s("}"),
            ],
            call: vec![format!("System.out.println(\"Digits: \" + {name}({}));", self.num(100, 99999))],
            needs: &[],
        });

        let r = &mut self.rng;
        let name = pick(r, &["randomFill", "fillRandom"]);
        out.push(Method {
            lines: vec![
                format!("static int[] {name}(int size) {{"),
                s("Random rand = new Random(42);"),
                format!("int[] {arr} = new int[size];"),
                format!("for (int {idx} = 0; {idx} < size; {idx}++) {{"),
                format!("{arr}[{idx}] = rand.nextInt(100);"),
                s("}"),
                format!("return {arr};"),
                s("}"),
            ],
            call: vec![format!("int[] random = {name}({});", self.num(3, 8)), s("System.out.println(random.length);")],
            needs: &["import java.util.Random;"],
        });

        let r = &mut self.rng;
        let name = pick(r, &["isPalindrome", "palindrome"]);
        out.push(Method {
            lines: vec![
                format!("public static boolean {name}(String {text}) {{"),
                s("int left = 0;"),
                format!("int right = {text}.length() - 1;"),
                s("while (left < right) {"),
                format!("if ({text}.charAt(left) != {text}.charAt(right)) {{"),
                s("return false;"),
                s("}"),
                s("left++;"),
                s("right--;"),
                s("}"),
                s("return true;"),
                s("}"),
            ],
            call: vec![format!("System.out.println({name}(\"{}\"));", pick(r, &["racecar", "hello", "noon"]))],
            needs: &[],
        });
        out
    }

    fn program(&mut self, class: &str) -> String {
        let mut methods = self.methods();
        methods.shuffle(&mut self.rng);
        let k = if self.rng.gen_bool(0.08) { methods.len() } else { self.rng.gen_range(0..=10) };
        methods.truncate(k);
        let use_scanner = self.rng.gen_bool(0.4);
        let use_field = self.rng.gen_bool(0.3);
        let use_point = self.rng.gen_bool(0.2);

        let mut imports: Vec<String> = Vec::new();
        if use_scanner {
            imports.push("import java.util.Scanner;".into());
        }
        let mut needs_numbers = false;
        for m in &methods {
            for n in m.needs {
                if n.starts_with("import") {
                    imports.push(n.to_string());
                } else {
                    needs_numbers = true;
                }
            }
        }
        imports.sort();
        imports.dedup();

        let mut out: Vec<String> = Vec::new();
        if self.rng.gen_bool(0.3) {
            out.push(format!("// {}", pick(&mut self.rng, &["Lab assignment", "Practice problem", "Homework", "Exercise"])));
        }
        out.extend(imports.iter().cloned());
        if !imports.is_empty() {
            out.push(String::new());
        }
        if self.rng.gen_bool(0.3) {
            out.push("/**".into());
            out.push(format!(" * {class} program."));
            out.push(" */".into());
        }
        self.open(&format!("public class {class}"), 0, &mut out);
        if use_field {
            let v = self.num(1, 100);
            out.push(format!("{}static final int LIMIT = {v};", self.style.indent));
            out.push(String::new());
        }
        if use_point {
            let body: Vec<String> = [
                "static class Point {",
                "int x;",
                "int y;",
                "Point(int x, int y) {",
                "this.x = x;",
                "this.y = y;",
                "}",
                "double distance() {",
                "return Math.sqrt(x * x + y * y);",
                "}",
                "}",
            ]
            .map(String::from)
            .to_vec();
            self.render(&body, 1, &mut out);
            out.push(String::new());
        }
        for m in &methods {
            self.render(&m.lines, 1, &mut out);
            out.push(String::new());
        }
        let mut main: Vec<String> = vec!["public static void main(String[] args) {".into()];
        if use_scanner {
            main.push("Scanner sc = new Scanner(System.in);".into());
            main.push("System.out.print(\"Enter a number: \");".into());
            main.push("int input = sc.nextInt();".into());
            main.push("System.out.println(\"You entered \" + input);".into());
        }
        if needs_numbers {
            let xs: Vec<String> = (0..self.rng.gen_range(3..8)).map(|_| self.num(1, 9).to_string()).collect();
            main.push(format!("int[] numbers = {{{}}};", xs.join(", ")));
        }
        if use_field {
            main.push("for (int i = 0; i < LIMIT; i += 10) {".into());
            main.push("System.out.println(\"Step \" + i);".into());
            main.push("}".into());
        }
        if use_point {
            main.push(format!("Point p = new Point({}, {});", self.num(0, 9), self.num(0, 9)));
            main.push("System.out.println(p.distance());".into());
        }
        for m in &methods {
            main.extend(m.call.iter().cloned());
        }
        if methods.is_empty() && !use_point && !use_field {
            main.push(format!("System.out.println(\"{}\");", pick(&mut self.rng, &["Hello, World!", "Hello Java", "Done"])));
        }
        if use_scanner {
            main.push("sc.close();".into());
        }
        main.push("}".into());
        self.render(&main, 1, &mut out);
        self.close(0, &mut out);
        let mut text = out.join("\n");
        text.push('\n');
        text
    }
}

fn main() {
    let mut args = std::env::args().skip(1);
    let dir = PathBuf::from(args.next().unwrap_or_else(|| "fixtures/java".into()));
    let count: usize = args.next().map(|s| s.parse().expect("count")).unwrap_or(200);
    let seed: u64 = args.next().map(|s| s.parse().expect("seed")).unwrap_or(2024);
    std::fs::create_dir_all(&dir).expect("create output dir");
    for i in 0..count {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
        let style = Style {
            indent: *["    ", "  ", "\t"].choose(&mut rng).unwrap(),
            allman: rng.gen_bool(0.25),
        };
        let class = format!("{}{}", pick(&mut rng, CLASS_NAMES), i);
        let mut g = Gen { rng, style };
        let text = g.program(&class);
        std::fs::write(dir.join(format!("{class}.java")), text).expect("write fixture");
    }
}
