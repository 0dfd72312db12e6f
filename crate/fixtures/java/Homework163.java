public class Homework163 {
    static final int LIMIT = 13;

    static char toLetter(int mark) {
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

    public static void drawStars(int size) {
        for (int row = 1; row <= size; row++) {
            for (int col = 0; col < row; col++) {
                System.out.print("*");
            }
            System.out.println();
        }
    }

    static boolean divisibleByTwo(int x) {
        return x % 2 == 0;
    }

    static int countVowels(String word) {
        int c = 0;
        for (int k = 0; k < word.length(); k++) {
            char ch = Character.toLowerCase(word.charAt(k));
            switch (ch) {
                case 'a':
                case 'e':
                case 'i':
                case 'o':
                case 'u':
                c++;
                break;
                default:
                break;
            }
        }
        return c;
    }

    public static long fact(int x) {
        if (x <= 1) {
            return 1;
        }
        return x * fact(x - 1);
    }

    static void countdown(int n) {
        do {
            System.out.println(n);
            n--;
            } while (n > 0);
            System.out.println("Go!");
        }

    static boolean isPrime(int x) {
        if (x < 2) {
            return false;
        }
        int d = 2;
        while (d * d <= x) {
            if (x % d == 0) {
                return false;
            }
            d++;
        }
        return true;
    }

    public static boolean palindrome(String word) {
        int left = 0;
        int right = word.length() - 1;
        while (left < right) {
            if (word.charAt(left) != word.charAt(right)) {
                return false;
            }
            left++;
            right--;
        }
        return true;
    }

    public static double bodyMassIndex(double wgt, double hgt) {
        double value = wgt / Math.pow(hgt, 2);
        return Math.round(value * 10) / 10.0;
    }

    public static void main(String[] args) {
        for (int i = 0; i < LIMIT; i += 10) {
            System.out.println("Step " + i);
        }
        System.out.println("Grade: " + toLetter(88));
        drawStars(3);
        if (divisibleByTwo(16)) {
            System.out.println("even");
        } else {
            System.out.println("odd");
        }
        System.out.println(countVowels("programming"));
        System.out.println(fact(10));
        countdown(3);
        for (int q = 2; q < 26; q++) {
            if (isPrime(q)) {
                System.out.print(q + " ");
            }
        }
        System.out.println();
        System.out.println(palindrome("racecar"));
        System.out.println("BMI: " + bodyMassIndex(77.5, 1.63));
    }
}
