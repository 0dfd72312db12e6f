public class Numbers65 {
    static final int LIMIT = 24;

    public static int abs(int n) {
        return n < 0 ? -n : n;
    }

    static int countVowels(String word) {
        int count = 0;
        for (int idx = 0; idx < word.length(); idx++) {
            char ch = Character.toLowerCase(word.charAt(idx));
            switch (ch) {
                case 'a':
                case 'e':
                case 'i':
                case 'o':
                case 'u':
                count++;
                break;
                default:
                break;
            }
        }
        return count;
    }

    static void countDown(int n) {
        do {
            System.out.println(n);
            n--;
            } while (n > 0);
            System.out.println("Go!");
        }

    public static void pattern(int rows) {
        for (int row = 1; row <= rows; row++) {
            for (int col = 0; col < row; col++) {
                System.out.print("*");
            }
            System.out.println();
        }
    }

    static boolean isEven(int n) {
        return n % 2 == 0;
    }

    public static int sumDigits(int n) {
        int acc = 0;
        while (n > 0) {
            acc += n % 10;
            n /= 10;
        }
        return acc;
    }

    static double pow(double x, int n) {
        double result = 1;
        for (int idx = 0; idx < n; idx++) {
            result *= x;
        }
        return result;
    }

    public static void main(String[] args) {
        for (int i = 0; i < LIMIT; i += 10) {
            System.out.println("Step " + i);
        }
        System.out.println(abs(-50));
        System.out.println(countVowels("hello world"));
        countDown(5);
        pattern(5);
        if (isEven(27)) {
            System.out.println("even");
        } else {
            System.out.println("odd");
        }
        System.out.println("Digits: " + sumDigits(17847));
        System.out.println(pow(2, 3));
    }
}
