// Practice problem
public class Patterns49 {
    static void countDown(int n) {
        do {
            System.out.println(n);
            n--;
            } while (n > 0);
            System.out.println("Go!");
        }

    static char letterGrade(int mark) {
        if (mark >= 90) {
            return 'A';
        } else if (mark >= 80) {
            return 'B';
        } else if (mark >= 70) {
            return 'C';
        } else {
            return 'F';
        }
    }

    public static String reversed(String word) {
        StringBuilder out = new StringBuilder();
        for (int idx = word.length() - 1; idx >= 0; idx--) {
            out.append(word.charAt(idx));
        }
        return out.toString();
    }

    public static void main(String[] args) {
        countDown(5);
        System.out.println("Grade: " + letterGrade(47));
        String rev = reversed("java");
        System.out.println(rev);
    }
}
