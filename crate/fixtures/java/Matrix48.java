// Practice problem
import java.util.Arrays;
import java.util.Scanner;

public class Matrix48 {
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

    public static double mean(int[] data) {
        double result = 0;
        for (int v : data) {
            result = result + v;
        }
        return result / data.length;
    }

    public static int abs(int n) {
        return n < 0 ? -n : n;
    }

    static int fib(int n) {
        int prev = 0;
        int curr = 1;
        for (int k = 0; k < n; k++) {
            int next = prev + curr;
            prev = curr;
            curr = next;
        }
        return prev;
    }

    static void sortArray(int[] data) {
        for (int k = 0; k < data.length - 1; k++) {
            for (int m = 0; m < data.length - 1 - k; m++) {
                if (data[m] > data[m + 1]) {
                    int swap = data[m];
                    data[m] = data[m + 1];
                    data[m + 1] = swap;
                }
            }
        }
    }

    public static void main(String[] args) {
        Scanner sc = new Scanner(System.in);
        System.out.print("Enter a number: ");
        int input = sc.nextInt();
        System.out.println("You entered " + input);
        int[] numbers = {3, 4, 2};
        Point p = new Point(1, 2);
        System.out.println(p.distance());
        double avg = mean(numbers);
        System.out.println("Average: " + avg);
        System.out.println(abs(-17));
        System.out.println("Fib: " + fib(6));
        sortArray(numbers);
        System.out.println(Arrays.toString(numbers));
        sc.close();
    }
}
