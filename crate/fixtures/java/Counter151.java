import java.util.Random;

public class Counter151 {
    static final int LIMIT = 65;

    public static void drawStars(int height) {
        for (int row = 1; row <= height; row++) {
            for (int col = 0; col < row; col++) {
                System.out.print("*");
            }
            System.out.println();
        }
    }

    static void countdown(int remaining) {
        do {
            System.out.println(remaining);
            remaining--;
            } while (remaining > 0);
            System.out.println("Go!");
        }

    static int greatestDivisor(int a, int b) {
        while (b != 0) {
            int t = b;
            b = a % b;
            a = t;
        }
        return a;
    }

    static int[] fillRandom(int size) {
        Random rand = new Random(42);
        int[] values = new int[size];
        for (int idx = 0; idx < size; idx++) {
            values[idx] = rand.nextInt(100);
        }
        return values;
    }

    static int findMax(int[] values) {
        int best = values[0];
        for (int idx = 1; idx < values.length; idx++) {
            if (values[idx] > best) {
                best = values[idx];
            }
        }
        return best;
    }

    public static int safeParse(String input) {
        try {
            return Integer.parseInt(input.trim());
        } catch (NumberFormatException e) {
            System.out.println("Not a number: " + e.getMessage());
            return 0;
        }
    }

    static char grade(int score) {
        if (score >= 90) {
            return 'A';
        } else if (score >= 80) {
            return 'B';
        } else if (score >= 70) {
            return 'C';
        } else {
            return 'F';
        }
    }

    public static double computeBmi(double kg, double meters) {
        double value = kg / Math.pow(meters, 2);
        return Math.round(value * 10) / 10.0;
    }

    public static void main(String[] args) {
        int[] numbers = {6, 2, 8, 8, 5};
        for (int i = 0; i < LIMIT; i += 10) {
            System.out.println("Step " + i);
        }
        drawStars(4);
        countdown(4);
        System.out.println("GCD: " + greatestDivisor(87, 8));
        int[] random = fillRandom(3);
        System.out.println(random.length);
        int top = findMax(numbers);
        System.out.println("Max is " + top);
        int parsed = safeParse("42");
        System.out.println(parsed);
        System.out.println("Grade: " + grade(68));
        System.out.println("BMI: " + computeBmi(74.5, 1.88));
    }
}
