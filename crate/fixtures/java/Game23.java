import java.util.Arrays;

public class Game23 {
    static class Point {
        int x;
        int y;
        Point(int x, int y) {
            this.x = x;
            this.y = y;
        }
        double distance() {
            return Math.sqrt(x * x + y * y);
        }
    }

    static void bubbleSort(int[] scores) {
        for (int idx = 0; idx < scores.length - 1; idx++) {
            for (int m = 0; m < scores.length - 1 - idx; m++) {
                if (scores[m] > scores[m + 1]) {
                    int swap = scores[m];
                    scores[m] = scores[m + 1];
                    scores[m + 1] = swap;
                }
            }
        }
    }

    public static void printTriangle(int size) {
        for (int row = 1; row <= size; row++) {
            for (int col = 0; col < row; col++) {
                System.out.print("*");
            }
            System.out.println();
        }
    }

    public static int toNumber(String text) {
        try {
            return Integer.parseInt(text.trim());
        } catch (NumberFormatException e) {
            System.out.println("Not a number: " + e.getMessage());
            return 0;
        }
    }

    static int countVowels(String text) {
        int count = 0;
        for (int idx = 0; idx < text.length(); idx++) {
            char ch = Character.toLowerCase(text.charAt(idx));
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

    public static double bmi(double kg, double meters) {
        double value = kg / Math.pow(meters, 2);
        return Math.round(value * 10) / 10.0;
    }

    public static long factorial(int num) {
        if (num <= 1) {
            return 1;
        }
        return num * factorial(num - 1);
    }

    static int fibonacci(int num) {
        int prev = 0;
        int curr = 1;
        for (int idx = 0; idx < num; idx++) {
            int next = prev + curr;
            prev = curr;
            curr = next;
        }
        return prev;
    }

    static void countDown(int n) {
        do {
            System.out.println(n);
            n--;
            } while (n > 0);
            System.out.println("Go!");
        }

    static boolean even(int num) {
        return num % 2 == 0;
    }

    public static void main(String[] args) {
        int[] numbers = {5, 5, 9, 3, 7, 6, 1};
        Point p = new Point(5, 9);
        System.out.println(p.distance());
        bubbleSort(numbers);
        System.out.println(Arrays.toString(numbers));
        printTriangle(6);
        int parsed = toNumber(" 7 ");
        System.out.println(parsed);
        System.out.println(countVowels("banana"));
        System.out.println("BMI: " + bmi(54.5, 1.92));
        System.out.println(factorial(5));
        System.out.println("Fib: " + fibonacci(12));
        countDown(3);
        if (even(24)) {
            System.out.println("even");
        } else {
            System.out.println("odd");
        }
    }
}
