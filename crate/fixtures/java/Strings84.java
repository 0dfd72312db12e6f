/**
 * Strings84 program.
 */
public class Strings84 {
    static final int LIMIT = 24;

    public static double mean(int[] scores) {
        double result = 0;
        for (int v : scores) {
            result = result + v;
        }
        return result / scores.length;
    }

    public static int search(int[] scores, int key) {
        for (int i = 0; i < scores.length; i++) {
            if (scores[i] == key) {
                return i;
            }
        }
        return -1;
    }

    public static void main(String[] args) {
        int[] numbers = {3, 7, 5};
        for (int i = 0; i < LIMIT; i += 10) {
            System.out.println("Step " + i);
        }
        double avg = mean(numbers);
        System.out.println("Average: " + avg);
        int pos = search(numbers, 8);
        System.out.println("Found at " + pos);
    }
}
