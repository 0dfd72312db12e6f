/**
 * Lab2 program.
 */
public class Lab2 {
    public static double computeAverage(int[] values) {
        double result = 0;
        for (int v : values) {
            result = result + v;
        }
        return result / values.length;
    }

    public static void main(String[] args) {
        int[] numbers = {5, 8, 2, 4};
        double avg = computeAverage(numbers);
        System.out.println("Average: " + avg);
    }
}
