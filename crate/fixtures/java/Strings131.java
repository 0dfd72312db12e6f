/**
 * Strings131 program.
 */
public class Strings131 {
    static final int LIMIT = 41;

    public static int absolute(int num) {
        return num < 0 ? -num : num;
    }

    public static int search(int[] scores, int wanted) {
        for (int k = 0; k < scores.length; k++) {
            if (scores[k] == wanted) {
                return k;
            }
        }
        return -1;
    }

    public static void main(String[] args) {
        int[] numbers = {3, 9, 4};
        for (int i = 0; i < LIMIT; i += 10) {
            System.out.println("Step " + i);
        }
        System.out.println(absolute(-25));
        int pos = search(numbers, 9);
        System.out.println("Found at " + pos);
    }
}
