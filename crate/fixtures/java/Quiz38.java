public class Quiz38 {
    public static double mean(int[] values) {
        double acc = 0;
        for (int v : values) {
            acc = acc + v;
        }
        return acc / values.length;
    }

    public static String reverse(String word) {
        StringBuilder out = new StringBuilder();
        for (int k = word.length() - 1; k >= 0; k--) {
            out.append(word.charAt(k));
        }
        return out.toString();
    }

    public static double toFahrenheit(double celsius) {
        return celsius * 9 / 5 + 32;
    }

    static double raise(double base, int exp) {
        double result = 1;
        for (int k = 0; k < exp; k++) {
            result *= base;
        }
        return result;
    }

    static int vowels(String word) {
        int found = 0;
        for (int k = 0; k < word.length(); k++) {
            char ch = Character.toLowerCase(word.charAt(k));
            switch (ch) {
                case 'a':
                case 'e':
                case 'i':
                case 'o':
                case 'u':
                found++;
                break;
                default:
                break;
            }
        }
        return found;
    }

    public static int digitSum(int x) {
        int acc = 0;
        while (x > 0) {
            acc += x % 10;
            x /= 10;
        }
        return acc;
    }

    public static void main(String[] args) {
        int[] numbers = {1, 3, 1, 8, 1, 5};
        double avg = mean(numbers);
        System.out.println("Average: " + avg);
        String rev = reverse("stressed");
        System.out.println(rev);
        System.out.println(toFahrenheit(1.0));
        System.out.println(raise(2, 10));
        System.out.println(vowels("hello world"));
        System.out.println("Digits: " + digitSum(86657));
    }
}
