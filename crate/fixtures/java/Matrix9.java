import java.util.Random;

/**
 * Matrix9 program.
 */
public class Matrix9 {
    static final int LIMIT = 68;

    static void launch(int left) {
        do {
            System.out.println(left);
            left--;
            } while (left > 0);
            System.out.println("Go!");
        }

    static double pow(double base, int exp) {
        double result = 1;
        for (int j = 0; j < exp; j++) {
            result *= base;
        }
        return result;
    }

    public static double bodyMassIndex(double kg, double meters) {
        double value = kg / Math.pow(meters, 2);
        return Math.round(value * 10) / 10.0;
    }

    static int[] fillRandom(int size) {
        Random rand = new Random(42);
        int[] scores = new int[size];
        for (int j = 0; j < size; j++) {
            scores[j] = rand.nextInt(100);
        }
        return scores;
    }

    public static void main(String[] args) {
        for (int i = 0; i < LIMIT; i += 10) {
            System.out.println("Step " + i);
        }
        launch(3);
        System.out.println(pow(2, 9));
        System.out.println("BMI: " + bodyMassIndex(87.5, 1.81));
        int[] random = fillRandom(6);
        System.out.println(random.length);
    }
}
