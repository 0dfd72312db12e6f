public class GradeBook97 {
    public static int sumDigits(int x) {
        int total = 0;
        while (x > 0) {
            total += x % 10;
            x /= 10;
        }
        return total;
    }

    public static int magnitude(int x) {
        return x < 0 ? -x : x;
    }

    public static int find(int[] data, int target) {
        for (int i = 0; i < data.length; i++) {
            if (data[i] == target) {
                return i;
            }
        }
        return -1;
    }

    public static double bodyMassIndex(double wgt, double hgt) {
        double value = wgt / Math.pow(hgt, 2);
        return Math.round(value * 10) / 10.0;
    }

    public static double toFahrenheit(double degrees) {
        return degrees * 9 / 5 + 32;
    }

    static void launch(int remaining) {
        do {
            System.out.println(remaining);
            remaining--;
            } while (remaining > 0);
            System.out.println("Go!");
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

    public static String reverse(String word) {
        StringBuilder builder = new StringBuilder();
        for (int i = word.length() - 1; i >= 0; i--) {
            builder.append(word.charAt(i));
        }
        return builder.toString();
    }

    public static void main(String[] args) {
        int[] numbers = {7, 4, 8, 6, 4, 3};
        System.out.println("Digits: " + sumDigits(32108));
        System.out.println(magnitude(28));
        int pos = find(numbers, 7);
        System.out.println("Found at " + pos);
        System.out.println("BMI: " + bodyMassIndex(85.5, 1.57));
        System.out.println(toFahrenheit(39.0));
        launch(4);
        System.out.println(palindrome("hello"));
        String rev = reverse("java");
        System.out.println(rev);
    }
}
